#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcirc::cli {

struct CorpusEntry {
    std::string file;
    int error_count = 0;
    int warning_count = 0;
    bool golden_mismatch = false;

    bool ok() const {
        return error_count == 0 && !golden_mismatch;
    }
};

struct CorpusReport {
    std::vector<CorpusEntry> entries;
    int total = 0;
    int ok_count = 0;
    int diagnostic_count = 0;  // files with errors
    int mismatch_count = 0;
};

/// `qcirc` entry point. Exit codes: 0 success, 1 compile errors present,
/// 2 usage or I/O failure.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int run(int argc, char **argv);

}  // namespace qcirc::cli
