#include "netpres/netpres.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;   // invalid diagram, or equiv answered "distinct"
constexpr int kExitUsage = 2;     // parse or usage error
constexpr int kExitUnknown = 3;   // search exhausted / normalization obstructed

struct CommandError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CommandError{kExitUsage, path + ": cannot open file"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Temp-and-rename so interrupted batch runs never leave half-written files.
void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CommandError{kExitUsage, path + ": cannot open for writing"};
        out << content;
        if (!out.flush()) throw CommandError{kExitUsage, path + ": write failed"};
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw CommandError{kExitUsage, path + ": rename failed: " + ec.message()};
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        atomic_write(out_path, content);
}

netpres::PresentationDiagram load_diagram(const std::string& path) {
    try {
        return netpres::parse(read_file(path));
    } catch (const netpres::ParseError& e) {
        throw CommandError{kExitUsage, path + ": parse error: " + e.what()};
    } catch (const netpres::SemanticError& e) {
        throw CommandError{kExitUsage, path + ": " + e.what()};
    }
}

netpres::PresentationDiagram load_valid_diagram(const std::string& path) {
    netpres::PresentationDiagram d = load_diagram(path);
    netpres::ValidationReport report = netpres::validate(d);
    if (!report.valid()) {
        std::string msg = path + ": invalid diagram";
        for (const netpres::Violation& v : report.violations)
            msg += "\n  " + v.code + ": " + v.message;
        throw CommandError{kExitInvalid, msg};
    }
    return d;
}

netpres::Int parse_int_arg(const std::string& text, const std::string& what) {
    try {
        if (text.empty()) throw std::runtime_error("empty");
        std::size_t k = text[0] == '-' || text[0] == '+' ? 1 : 0;
        if (k == text.size()) throw std::runtime_error("no digits");
        for (; k < text.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(text[k]))) throw std::runtime_error("bad digit");
        return netpres::Int(text);
    } catch (const std::exception&) {
        throw CommandError{kExitUsage, "cannot parse " + what + " '" + text + "'"};
    }
}

std::vector<netpres::Int> parse_int_list(const std::string& text, std::size_t count,
                                         const std::string& what) {
    std::vector<netpres::Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int_arg(item, what));
    if (out.size() != count)
        throw CommandError{kExitUsage, what + " needs " + std::to_string(count) +
                                           " comma-separated integers, got '" + text + "'"};
    return out;
}

netpres::ExtendedSlope parse_slope_arg(const std::string& text) {
    if (text == "inf" || text == "1/0") return netpres::ExtendedSlope::infinity();
    std::size_t slash = text.find('/');
    netpres::Int p = parse_int_arg(text.substr(0, slash), "slope numerator");
    netpres::Int q = slash == std::string::npos
                         ? netpres::Int(1)
                         : parse_int_arg(text.substr(slash + 1), "slope denominator");
    if (p == 0 && q == 0) throw CommandError{kExitUsage, "slope 0/0 is not a slope"};
    return netpres::ExtendedSlope::make(p, q);
}

std::string parity_text(const netpres::Parity& p) {
    return "(" + std::to_string(p.c1) + "," + std::to_string(p.c2) + ")";
}

std::string info_text(const std::string& path, const netpres::PresentationDiagram& d) {
    netpres::Portrait p = netpres::portrait(d);
    netpres::Divisors div = netpres::elementary_divisors(d.basis);
    std::ostringstream out;
    out << path << ":\n";
    out << "  degree = " << netpres::degree(d) << "\n";
    out << "  divisors = (" << div.m << ", " << div.n << ")\n";
    out << "  cv_classes =";
    for (const netpres::Parity& cls : p.cv_classes) out << " " << parity_text(cls);
    out << "\n  map:";
    for (int k = 0; k < 4; ++k) {
        out << " " << netpres::to_string(p.points[k].rep) << "->"
            << netpres::to_string(p.points[p.edges[k]].rep);
        if (p.cv_image[k]) out << "*";
    }
    out << "\n  postcritical_count = " << p.postcritical_count() << "\n";
    out << "  is_net = " << (p.is_net() ? "true" : "false") << "\n";
    return out.str();
}

std::string info_json(const std::string& path, const netpres::PresentationDiagram& d) {
    std::string escaped;
    for (char c : path) {
        if (c == '"' || c == '\\') escaped += '\\';
        escaped += c;
    }
    std::string body = netpres::portrait_json(d);  // starts with '{'
    return "{\"file\": \"" + escaped + "\", " + body.substr(1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact integer-lattice presentation diagrams of NET maps"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string file_arg;
    std::string out_path;
    bool json = false;

    auto* validate_cmd = app.add_subcommand("validate", "check diagram files");
    validate_cmd->add_option("files", files, "diagram files")->required();

    auto* info_cmd = app.add_subcommand("info", "degree, divisors, portrait and NET test");
    info_cmd->add_option("files", files, "diagram files")->required();
    info_cmd->add_flag("--json", json, "one JSON object per file");

    std::string slope_text;
    auto* slope_cmd = app.add_subcommand("slope", "pullback of a slope with covering degree");
    slope_cmd->add_option("file", file_arg, "diagram file")->required();
    slope_cmd->add_option("slope", slope_text, "slope p/q, an integer, or inf")->required();

    std::vector<std::string> slope_args;
    auto* mfs_cmd = app.add_subcommand("matrix-from-slopes",
                                       "presentation matrix from the pullbacks of slopes 0 and inf");
    mfs_cmd->add_option("data", slope_args, "S1 D1 S2 D2: pullback slope and degree for 0, then inf")
        ->expected(4);

    std::string matrix_text;
    auto* twist_cmd = app.add_subcommand("twist", "apply a positive-determinant matrix");
    twist_cmd->add_option("file", file_arg, "diagram file")->required();
    twist_cmd->add_option("--matrix", matrix_text, "row-major a,b,c,d for [[a,b],[c,d]]")->required();
    twist_cmd->add_option("-o,--output", out_path, "output file (default: stdout)");

    std::string vector_text;
    auto* translate_cmd = app.add_subcommand("translate", "twist by a translation");
    translate_cmd->add_option("file", file_arg, "diagram file")->required();
    translate_cmd->add_option("--vector", vector_text, "x,y in standard coordinates")->required();
    translate_cmd->add_option("-o,--output", out_path, "output file (default: stdout)");

    auto* normalize_cmd = app.add_subcommand("normalize", "rebase so the elementary divisors divide the basis");
    normalize_cmd->add_option("file", file_arg, "diagram file")->required();
    normalize_cmd->add_option("-o,--output", out_path, "output file (default: stdout)");

    std::string bound_text = "3";
    auto* equiv_cmd = app.add_subcommand("equiv", "bounded Euclidean-data equivalence search");
    equiv_cmd->add_option("files", files, "two diagram files")->required()->expected(2);
    equiv_cmd->add_option("--bound", bound_text, "entry bound for the conjugator search (default 3)");

    int cell = 40;
    bool no_grid = false, labels = false;
    auto* render_cmd = app.add_subcommand("render", "draw the diagram as SVG");
    render_cmd->add_option("file", file_arg, "diagram file")->required();
    render_cmd->add_option("-o,--output", out_path, "output SVG file")->required();
    render_cmd->add_option("--cell", cell, "pixels per unit cell (default 40)");
    render_cmd->add_flag("--no-grid", no_grid, "omit the unit grid");
    render_cmd->add_flag("--labels", labels, "annotate dots with XML comments");

    auto* canon_cmd = app.add_subcommand("canon", "projective canonical form");
    canon_cmd->add_option("file", file_arg, "diagram file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*validate_cmd) {
            int worst = kExitOk;
            for (const std::string& path : files) {
                try {
                    netpres::PresentationDiagram d = load_diagram(path);
                    netpres::ValidationReport report = netpres::validate(d);
                    if (report.valid()) {
                        std::cout << path << ": ok\n";
                    } else {
                        std::cout << path << ": invalid\n";
                        for (const netpres::Violation& v : report.violations)
                            std::cout << "  " << v.code << ": " << v.message << "\n";
                        worst = std::max(worst, kExitInvalid);
                    }
                } catch (const CommandError& e) {
                    std::cerr << e.message << "\n";
                    worst = std::max(worst, e.code);
                }
            }
            return worst;
        }

        if (*info_cmd) {
            int worst = kExitOk;
            for (const std::string& path : files) {
                try {
                    netpres::PresentationDiagram d = load_valid_diagram(path);
                    std::cout << (json ? info_json(path, d) : info_text(path, d));
                } catch (const CommandError& e) {
                    std::cerr << e.message << "\n";
                    worst = std::max(worst, e.code);
                }
            }
            return worst;
        }

        if (*slope_cmd) {
            netpres::PresentationDiagram d = load_valid_diagram(file_arg);
            netpres::SlopePullback pb = netpres::preimage_slope(d.basis, parse_slope_arg(slope_text));
            std::cout << "slope " << netpres::to_string(pb.slope) << ", degree "
                      << pb.local_degree << "\n";
            return kExitOk;
        }

        if (*mfs_cmd) {
            netpres::ExtendedSlope s0 = parse_slope_arg(slope_args[0]);
            netpres::Int d0 = parse_int_arg(slope_args[1], "degree");
            netpres::ExtendedSlope s1 = parse_slope_arg(slope_args[2]);
            netpres::Int d1 = parse_int_arg(slope_args[3], "degree");
            if (d0 <= 0 || d1 <= 0) throw CommandError{kExitUsage, "degrees must be positive"};
            try {
                netpres::IntMat2 a = netpres::matrix_from_pullback_data(s0, d0, s1, d1);
                std::cout << "lambda1 = " << netpres::to_string(a.col1) << "\n";
                std::cout << "lambda2 = " << netpres::to_string(a.col2) << "\n";
                return kExitOk;
            } catch (const netpres::SingularInput&) {
                throw CommandError{kExitUsage, "slope data matrix is singular"};
            } catch (const netpres::NonIntegralResult&) {
                throw CommandError{kExitUsage, "inconsistent data: inverse matrix is not integral"};
            }
        }

        if (*twist_cmd) {
            netpres::PresentationDiagram d = load_valid_diagram(file_arg);
            std::vector<netpres::Int> m = parse_int_list(matrix_text, 4, "--matrix");
            netpres::IntMat2 mat = netpres::IntMat2::from_rows(m[0], m[1], m[2], m[3]);
            if (netpres::det(mat) <= 0)
                throw CommandError{kExitUsage, "twist matrix must have positive determinant"};
            write_output(out_path, netpres::serialize(netpres::matrix_twist(d, mat)));
            return kExitOk;
        }

        if (*translate_cmd) {
            netpres::PresentationDiagram d = load_valid_diagram(file_arg);
            std::vector<netpres::Int> v = parse_int_list(vector_text, 2, "--vector");
            write_output(out_path,
                         netpres::serialize(netpres::translation_twist(d, {v[0], v[1]})));
            return kExitOk;
        }

        if (*normalize_cmd) {
            netpres::PresentationDiagram d = load_valid_diagram(file_arg);
            auto normalized = netpres::normalize_divisors(d);
            if (!normalized) {
                std::cerr << file_arg << ": normalization obstructed: a push segment has no "
                             "translate inside the new fundamental domain\n";
                return kExitUnknown;
            }
            write_output(out_path, netpres::serialize(*normalized));
            return kExitOk;
        }

        if (*equiv_cmd) {
            netpres::PresentationDiagram d1 = load_valid_diagram(files[0]);
            netpres::PresentationDiagram d2 = load_valid_diagram(files[1]);
            netpres::Int bound = parse_int_arg(bound_text, "--bound");
            if (bound <= 0) throw CommandError{kExitUsage, "--bound must be positive"};
            netpres::EquivalenceVerdict verdict = netpres::euclidean_equivalence(d1, d2, bound);
            if (const auto* eq = std::get_if<netpres::Equivalent>(&verdict)) {
                std::cout << "equivalent: conjugator = " << netpres::to_string(eq->conjugator)
                          << ", translation = " << netpres::to_string(eq->translation)
                          << ", sign = " << (eq->sgn > 0 ? "+1" : "-1") << "\n";
                return kExitOk;
            }
            if (const auto* dist = std::get_if<netpres::Distinct>(&verdict)) {
                std::cout << "distinct: " << dist->reason << "\n";
                return kExitInvalid;
            }
            std::cout << "unknown: no witness with conjugator entries up to " << bound << "\n";
            return kExitUnknown;
        }

        if (*render_cmd) {
            netpres::PresentationDiagram d = load_diagram(file_arg);
            if (cell <= 0) throw CommandError{kExitUsage, "--cell must be positive"};
            netpres::RenderOptions opts;
            opts.cell_px = cell;
            opts.grid = !no_grid;
            opts.labels = labels;
            atomic_write(out_path, netpres::render_svg(d, opts));
            return kExitOk;
        }

        if (*canon_cmd) {
            netpres::PresentationDiagram d = load_diagram(file_arg);
            std::cout << netpres::serialize(netpres::projective_canonical(d));
            return kExitOk;
        }
    } catch (const CommandError& e) {
        std::cerr << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
