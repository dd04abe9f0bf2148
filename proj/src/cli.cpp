#include "qcirc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "qcirc/compile.hpp"

namespace qcirc::cli {

namespace fs = std::filesystem;

namespace {

constexpr int EXIT_OK = 0;
constexpr int EXIT_DIAGNOSTICS = 1;
constexpr int EXIT_USAGE = 2;

std::optional<std::string> read_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool write_file(const fs::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        return false;
    }
    out << content;
    return bool(out);
}

struct Options {
    std::vector<std::string> inputs;
    std::string out_path;
    std::string format = "svg";
    bool fit_labels = false;
    bool corner_only_groups = false;
    std::string style_path;
    double scale = 1.0;
    std::string corpus_dir;
    std::string goldens_dir;
};

void print_diagnostics(
    const std::vector<Diagnostic> &diags, const std::string &file, std::ostream &err) {
    for (const auto &d : diags) {
        err << format_diagnostic(d, file) << "\n";
    }
}

int compile_one(const fs::path &input, const Options &opts, const CompileOptions &compile_opts,
                std::ostream &out, std::ostream &err) {
    auto source = read_file(input);
    if (!source) {
        err << "qcirc: cannot read '" << input.string() << "'\n";
        return EXIT_USAGE;
    }
    CompileResult result = compile_source(*source, compile_opts);
    print_diagnostics(result.diagnostics, input.string(), err);
    if (!result.ok()) {
        return EXIT_DIAGNOSTICS;
    }
    if (opts.format == "check") {
        return EXIT_OK;
    }

    std::string payload = opts.format == "svg" ? result.svg : ast_to_json(*result.ast);
    if (opts.out_path.empty()) {
        out << payload;
        return EXIT_OK;
    }
    fs::path target(opts.out_path);
    std::error_code ec;
    if (opts.inputs.size() > 1 || fs::is_directory(target, ec)) {
        fs::create_directories(target, ec);
        target /= input.stem().string() + (opts.format == "svg" ? ".svg" : ".json");
    }
    if (!write_file(target, payload)) {
        err << "qcirc: cannot write '" << target.string() << "'\n";
        return EXIT_USAGE;
    }
    return EXIT_OK;
}

CorpusReport run_corpus(
    const fs::path &dir, const fs::path &goldens, const CompileOptions &compile_opts,
    std::ostream &out, std::ostream &err) {
    CorpusReport report;
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".qc") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    for (const auto &file : files) {
        CorpusEntry entry;
        entry.file = file.filename().string();
        auto source = read_file(file);
        if (!source) {
            err << "qcirc: cannot read '" << file.string() << "'\n";
            entry.error_count = 1;
        } else {
            CompileResult result = compile_source(*source, compile_opts);
            for (const auto &d : result.diagnostics) {
                (d.severity == Severity::Error ? entry.error_count : entry.warning_count)++;
            }
            if (entry.error_count == 0 && !goldens.empty()) {
                fs::path golden = goldens / (file.stem().string() + ".svg");
                auto expected = read_file(golden);
                if (expected && *expected != result.svg) {
                    entry.golden_mismatch = true;
                }
            }
        }
        report.entries.push_back(entry);
    }

    report.total = static_cast<int>(report.entries.size());
    for (const auto &entry : report.entries) {
        if (entry.error_count > 0) {
            report.diagnostic_count++;
        } else if (entry.golden_mismatch) {
            report.mismatch_count++;
        } else {
            report.ok_count++;
        }
    }

    size_t name_width = 4;
    for (const auto &entry : report.entries) {
        name_width = std::max(name_width, entry.file.size());
    }
    out << "FILE";
    out << std::string(name_width - 4 + 2, ' ') << "STATUS\n";
    for (const auto &entry : report.entries) {
        out << entry.file << std::string(name_width - entry.file.size() + 2, ' ');
        if (entry.error_count > 0) {
            out << entry.error_count << " error" << (entry.error_count == 1 ? "" : "s");
            if (entry.warning_count > 0) {
                out << ", " << entry.warning_count << " warning"
                    << (entry.warning_count == 1 ? "" : "s");
            }
        } else if (entry.golden_mismatch) {
            out << "golden mismatch";
        } else if (entry.warning_count > 0) {
            out << "ok (" << entry.warning_count << " warning"
                << (entry.warning_count == 1 ? "" : "s") << ")";
        } else {
            out << "ok";
        }
        out << "\n";
    }
    out << "total: " << report.total << " files, " << report.ok_count << " ok, "
        << report.diagnostic_count << " with errors, " << report.mismatch_count
        << " golden mismatches\n";
    return report;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Q-circuit diagram compiler: parses circuit expressions, checks placement "
                 "rules, and emits SVG or AST JSON. Column/row spacing defaults to 1em when "
                 "@C/@R are not given."};
    app.name("qcirc");

    Options opts;
    app.add_option("inputs", opts.inputs, "circuit source files");
    app.add_option("-o,--out", opts.out_path, "output file (or directory for multiple inputs)");
    app.add_option("--format", opts.format, "output kind")
        ->check(CLI::IsMember({"svg", "json", "check"}))
        ->capture_default_str();
    app.add_flag("--fit-labels", opts.fit_labels, "grow the canvas to cover stick/label overflow");
    app.add_flag("--corner-only-groups", opts.corner_only_groups,
                 "size group boxes from the region's corner entries only");
    app.add_option("--style", opts.style_path, "style table overrides (key = length lines)")
        ->envname("QCIRC_STYLE");
    app.add_option("--scale", opts.scale, "em to user-unit scale factor")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--corpus", opts.corpus_dir, "compile every .qc file in a directory");
    app.add_option("--goldens", opts.goldens_dir,
                   "directory of golden SVGs to compare corpus output against")
        ->needs("--corpus");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return EXIT_OK;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n" << app.help();
        return EXIT_USAGE;
    }

    if (opts.inputs.empty() && opts.corpus_dir.empty()) {
        err << "qcirc: no input files\n" << app.help();
        return EXIT_USAGE;
    }
    if (opts.format == "check" && !opts.out_path.empty()) {
        err << "qcirc: --format check takes no output path\n";
        return EXIT_USAGE;
    }

    CompileOptions compile_opts;
    compile_opts.fit_labels = opts.fit_labels;
    compile_opts.corner_only_groups = opts.corner_only_groups;
    compile_opts.scale = opts.scale;
    if (!opts.style_path.empty()) {
        try {
            compile_opts.style = load_style_file(opts.style_path);
        } catch (const std::exception &e) {
            err << "qcirc: " << e.what() << "\n";
            return EXIT_USAGE;
        }
    }

    int rc = EXIT_OK;

    if (!opts.corpus_dir.empty()) {
        fs::path dir(opts.corpus_dir);
        if (!fs::is_directory(dir)) {
            err << "qcirc: corpus directory '" << opts.corpus_dir << "' not found\n";
            return EXIT_USAGE;
        }
        CorpusReport report = run_corpus(dir, fs::path(opts.goldens_dir), compile_opts, out, err);
        if (report.diagnostic_count > 0 || report.mismatch_count > 0) {
            rc = EXIT_DIAGNOSTICS;
        }
    }

    for (const auto &input : opts.inputs) {
        rc = std::max(rc, compile_one(fs::path(input), opts, compile_opts, out, err));
    }
    return rc;
}

int run(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace qcirc::cli
