// Command-line front end: canonical-basis matrices, constructible characters,
// family partitions, and the self-verification report.

#include "cb2/canonical.hpp"
#include "cb2/cyclotomic.hpp"
#include "cb2/errors.hpp"
#include "cb2/hecke.hpp"
#include "cb2/io.hpp"
#include "cb2/quantum_action.hpp"
#include "cb2/symbol.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using cb2::json;

constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

void write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << content;
}

std::vector<int> parse_charges(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

std::map<int, int> parse_weight_raw(const std::string& text) {
    // "j:c,j:c" pairs of simple-root coefficients.
    std::map<int, int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--weight-raw expects j:c pairs: " + item);
        out[std::stoi(item.substr(0, colon))] = std::stoi(item.substr(colon + 1));
    }
    return out;
}

// ---- canonical ----

struct CanonicalOptions {
    int m = 0;
    int r = 0;
    int k = 0;
    std::string weight_of;
    std::string weight_raw;
    std::string format = "json";
    std::string out;
    bool show_word = false;
};

int run_canonical(const CanonicalOptions& opt) {
    cb2::BasisMatrix matrix = cb2::basis_matrix(opt.m, opt.k, opt.r);
    if (!opt.weight_of.empty()) {
        const cb2::Bipartition anchor = cb2::parse_bipartition(opt.weight_of, opt.k, opt.r);
        if (anchor.degree() != opt.m) {
            std::cerr << "error: --weight-of bipartition has degree " << anchor.degree()
                      << ", not m = " << opt.m << "\n";
            return kExitUsage;
        }
        matrix = cb2::restrict_to_weight(matrix, cb2::sl_weight(anchor));
    } else if (!opt.weight_raw.empty()) {
        cb2::WeightVector weight{{opt.k, opt.k + opt.r}, parse_weight_raw(opt.weight_raw)};
        std::sort(weight.highest_weight.begin(), weight.highest_weight.end());
        matrix = cb2::restrict_to_weight(matrix, weight);
    }

    if (opt.format == "csv") {
        write_out(opt.out, cb2::matrix_to_csv(matrix));
    } else if (opt.format == "latex") {
        write_out(opt.out, cb2::matrix_to_latex(matrix));
    } else {
        json doc{{"m", opt.m}, {"k", opt.k}, {"r", opt.r}};
        json rows = json::array(), cols = json::array(), entries = json::array();
        for (const auto& bp : matrix.rows) rows.push_back(cb2::to_json(bp));
        for (const auto& bp : matrix.cols) cols.push_back(cb2::to_json(bp));
        for (const auto& row : matrix.entries) {
            json row_json = json::array();
            for (const auto& entry : row) row_json.push_back(cb2::to_json(entry));
            entries.push_back(std::move(row_json));
        }
        doc["rows"] = std::move(rows);
        doc["cols"] = std::move(cols);
        doc["entries"] = std::move(entries);
        if (opt.show_word) {
            json words = json::array();
            for (const auto& bp : matrix.cols)
                words.push_back(cb2::to_json(cb2::monomial_oracle(bp).word));
            doc["words"] = std::move(words);
        }
        write_out(opt.out, doc.dump(2) + "\n");
    }
    return 0;
}

// ---- constructible ----

struct ConstructibleOptions {
    std::string type;
    int m = 0;
    int r = 0;
    int k = 0;
    bool literal = false;
    std::string format = "json";
    std::string out;
};

int run_constructible(const ConstructibleOptions& opt) {
    json combinations = json::array();
    std::vector<std::vector<std::string>> supports; // label strings per combination
    if (opt.type == "B") {
        for (const auto& s : cb2::enumerate_standard(opt.m, opt.k, opt.r)) {
            const cb2::ConstructibleB comb = cb2::constructible_B(s);
            combinations.push_back(cb2::to_json(comb));
            std::vector<std::string> labels;
            for (const auto& [label, coeff] : comb.terms)
                labels.push_back(cb2::format_bipartition(label));
            supports.push_back(std::move(labels));
        }
    } else {
        if (opt.r != 0) {
            std::cerr << "error: --type D forces r = 0\n";
            return kExitUsage;
        }
        for (const auto& comb : cb2::constructible_D(opt.m, opt.k)) {
            combinations.push_back(cb2::to_json(comb, opt.literal));
            std::vector<std::string> labels;
            for (const auto& [label, coeff] : comb.terms)
                labels.push_back(cb2::format_dlabel(label));
            supports.push_back(std::move(labels));
        }
    }

    if (opt.format == "json") {
        json doc{{"type", opt.type}, {"m", opt.m}, {"k", opt.k}, {"r", opt.r},
                 {"combinations", std::move(combinations)}};
        write_out(opt.out, doc.dump(2) + "\n");
    } else if (opt.format == "csv") {
        std::ostringstream os;
        for (const auto& labels : supports) {
            for (std::size_t i = 0; i < labels.size(); ++i)
                os << (i ? "," : "") << '"' << labels[i] << '"';
            os << '\n';
        }
        write_out(opt.out, os.str());
    } else {
        std::ostringstream os;
        os << "\\begin{array}{l}\n";
        for (const auto& labels : supports) {
            os << "\\psi = ";
            for (std::size_t i = 0; i < labels.size(); ++i)
                os << (i ? " + " : "") << "\\chi_{" << labels[i] << "}";
            os << " \\\\\n";
        }
        os << "\\end{array}\n";
        write_out(opt.out, os.str());
    }
    return 0;
}

// ---- families ----

struct FamiliesOptions {
    int d = 2;
    std::string charges;
    int m = 0;
    std::string format = "json";
    std::string out;
};

int run_families(const FamiliesOptions& opt) {
    const std::vector<int> charges = parse_charges(opt.charges);
    if (static_cast<int>(charges.size()) != opt.d) {
        std::cerr << "error: --charges needs exactly d = " << opt.d << " entries\n";
        return kExitUsage;
    }
    const cb2::CyclotomicParams params{opt.d, opt.m, charges};
    const auto blocks = cb2::rouquier_families(params);

    if (opt.format == "json") {
        json doc{{"d", opt.d}, {"m", opt.m}, {"charges", charges}};
        json blocks_json = json::array();
        for (const auto& block : blocks) {
            json labels = json::array();
            for (const auto& dp : block.labels) labels.push_back(cb2::to_json(dp));
            blocks_json.push_back(
                json{{"content", cb2::to_json(block.content)}, {"labels", std::move(labels)}});
        }
        doc["families"] = std::move(blocks_json);
        write_out(opt.out, doc.dump(2) + "\n");
    } else {
        auto content_str = [](const cb2::ContentMultiset& content) {
            std::ostringstream os;
            os << '{';
            bool first = true;
            for (const auto& [value, mult] : content.counts())
                for (int copy = 0; copy < mult; ++copy) {
                    os << (first ? "" : ",") << value;
                    first = false;
                }
            os << '}';
            return os.str();
        };
        std::ostringstream os;
        if (opt.format == "csv") {
            for (const auto& block : blocks) {
                os << '"' << content_str(block.content) << '"';
                for (const auto& dp : block.labels) os << ",\"" << cb2::format_dpartition(dp) << '"';
                os << '\n';
            }
        } else {
            os << "\\begin{array}{ll}\n";
            for (const auto& block : blocks) {
                os << content_str(block.content) << " & ";
                for (std::size_t i = 0; i < block.labels.size(); ++i)
                    os << (i ? ",\\ " : "") << cb2::format_dpartition(block.labels[i]);
                os << " \\\\\n";
            }
            os << "\\end{array}\n";
        }
        write_out(opt.out, os.str());
    }
    return 0;
}

// ---- verify ----

struct VerifyOptions {
    int max_m = 4;
    int max_r = 2;
    std::string format = "text";
    std::string out;
};

struct CheckReport {
    std::vector<std::pair<std::string, std::string>> lines; // name -> "" or failure detail
    bool ok = true;

    void record(const std::string& name, bool pass, const std::string& detail = "") {
        lines.emplace_back(name, pass ? "" : detail);
        ok = ok && pass;
    }
};

void verify_oracle_agreement(CheckReport& report, int max_m, int max_r) {
    int checked = 0;
    for (int r = 0; r <= max_r; ++r)
        for (int m = 0; m <= max_m; ++m)
            for (const auto& s : cb2::enumerate_standard(m, 0, r)) {
                if (cb2::monomial_oracle(s).vector != cb2::canonical_vector(s)) {
                    report.record("oracle-vs-formula", false, "mismatch at " + s.str());
                    return;
                }
                ++checked;
            }
    report.record("oracle-vs-formula (" + std::to_string(checked) + " symbols)", true);
}

void verify_structure(CheckReport& report, int max_m, int max_r) {
    for (int r = 0; r <= max_r; ++r)
        for (int m = 0; m <= max_m; ++m)
            for (const auto& s : cb2::enumerate_standard(m, 0, r)) {
                const auto pairs = cb2::psi_pairs(s);
                const auto vec = cb2::canonical_vector(s);
                const std::size_t expected = std::size_t{1} << pairs.count();
                if (vec.support_size() != expected) {
                    report.record("structural-invariants", false, "support != 2^p at " + s.str());
                    return;
                }
                if (!cb2::weight_check(vec)) {
                    report.record("structural-invariants", false, "mixed weights at " + s.str());
                    return;
                }
                const cb2::Bipartition top_label = cb2::bipartition_from_symbol(s);
                for (const auto& [bp, coeff] : vec.terms()) {
                    const bool diagonal = bp == top_label;
                    if (!coeff.is_monomial() ||
                        coeff.coefficient(coeff.min_exponent()) != 1 ||
                        (diagonal ? coeff.min_exponent() != 0 : coeff.min_exponent() < 1)) {
                        report.record("structural-invariants", false,
                                      "non-unitriangular coefficient at " + s.str());
                        return;
                    }
                }
            }
    report.record("structural-invariants", true);
}

void verify_involution_bijection(CheckReport& report, int max_m, int max_r) {
    for (int r = 0; r <= max_r; ++r)
        for (int m = 0; m <= max_m; ++m) {
            std::map<cb2::ZData, int> standard_per_class;
            for (const auto& s : cb2::enumerate_standard(m, 0, r)) {
                const cb2::ZData zd = cb2::z_data(s);
                standard_per_class[zd] += 1;
                const auto inv = cb2::involution_from_symbol(s);
                if (cb2::symbol_from_involution(zd, inv) != s) {
                    report.record("involution-bijection", false, "round trip failed at " + s.str());
                    return;
                }
            }
            for (const auto& [zd, count] : standard_per_class) {
                if (static_cast<int>(cb2::admissible_involutions(zd).size()) != count) {
                    report.record("involution-bijection", false, "count mismatch for a Z class");
                    return;
                }
            }
        }
    report.record("involution-bijection", true);
}

void verify_specialization(CheckReport& report, int max_m, int max_r) {
    for (int r = 0; r <= max_r; ++r)
        for (int m = 0; m <= max_m; ++m)
            for (const auto& s : cb2::enumerate_standard(m, 0, r)) {
                const auto comb = cb2::constructible_B(s);
                const auto vec = cb2::canonical_vector(s);
                bool same = comb.terms.size() == vec.support_size();
                if (same)
                    for (const auto& [bp, coeff] : vec.terms()) {
                        auto it = comb.terms.find(bp);
                        if (it == comb.terms.end() ||
                            it->second.num != coeff.eval_at_one() * it->second.den) {
                            same = false;
                            break;
                        }
                    }
                if (!same) {
                    report.record("constructible-vs-specialization", false,
                                  "two paths disagree at " + s.str());
                    return;
                }
            }
    report.record("constructible-vs-specialization", true);
}

void verify_families(CheckReport& report, int max_m, int max_r) {
    for (int r = 0; r <= max_r; ++r)
        for (int m = 0; m <= max_m; ++m) {
            const auto blocks = cb2::families(m, 0, r);

            // Graph route: labels joined when they share a constructible support.
            const auto bps = cb2::enumerate_bipartitions(m, 0, r);
            std::map<cb2::Bipartition, std::size_t> index;
            for (std::size_t i = 0; i < bps.size(); ++i) index.emplace(bps[i], i);
            std::vector<std::size_t> parent(bps.size());
            for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
            auto find = [&](std::size_t x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (const auto& s : cb2::enumerate_standard(m, 0, r)) {
                const auto comb = cb2::constructible_B(s);
                auto first = index.at(comb.terms.begin()->first);
                for (const auto& [bp, coeff] : comb.terms) parent[find(index.at(bp))] = find(first);
            }
            std::map<std::size_t, std::set<cb2::Bipartition>> components;
            for (std::size_t i = 0; i < bps.size(); ++i) components[find(i)].insert(bps[i]);
            std::set<std::set<cb2::Bipartition>> graph_blocks;
            for (auto& [root, labels] : components) graph_blocks.insert(labels);

            std::set<std::set<cb2::Bipartition>> content_blocks;
            for (const auto& block : blocks)
                content_blocks.insert(
                    std::set<cb2::Bipartition>(block.labels.begin(), block.labels.end()));
            if (content_blocks != graph_blocks) {
                report.record("families", false,
                              "content vs graph mismatch at m=" + std::to_string(m) +
                                  " r=" + std::to_string(r));
                return;
            }

            // Rouquier route at d = 2, charges (k+r, k).
            const cb2::CyclotomicParams params{2, m, {r, 0}};
            std::set<std::set<cb2::Bipartition>> rouquier_blocks;
            for (const auto& block : cb2::rouquier_families(params)) {
                std::set<cb2::Bipartition> labels;
                for (const auto& dp : block.labels)
                    labels.insert(cb2::Bipartition{dp.components[0], dp.components[1], 0, r});
                rouquier_blocks.insert(std::move(labels));
            }
            if (rouquier_blocks != content_blocks) {
                report.record("families", false,
                              "rouquier mismatch at m=" + std::to_string(m) +
                                  " r=" + std::to_string(r));
                return;
            }
        }
    report.record("families (content = graph = rouquier)", true);
}

void verify_goldens(CheckReport& report, int max_m, int max_r) {
    // Example 2.1 pairing data.
    const cb2::Symbol example{{1, 3, 5, 8, 9}, {3, 6, 7, 10}, 0, 4, 1};
    const auto pairs = cb2::psi_pairs(example);
    const std::vector<std::pair<int, int>> expected_pairs{{6, 5}, {7, 1}, {10, 9}};
    report.record("golden-pairing-example", pairs.pairs == expected_pairs &&
                                                pairs.fixed == std::vector<int>{3});

    if (max_m >= 6 && max_r >= 1) {
        const auto matrix = cb2::restrict_to_weight(
            cb2::basis_matrix(6, 0, 1),
            cb2::sl_weight(cb2::Bipartition{cb2::Partition{{1, 2}}, cb2::Partition{{1, 2}}, 0, 1}));
        bool pass = matrix.rows.size() == 10 && matrix.cols.size() == 5;
        if (pass) {
            // Spot anchors of the block display.
            const cb2::Bipartition corner{cb2::Partition{}, cb2::Partition{{3, 3}}, 0, 1};
            const cb2::Bipartition dense{cb2::Partition{{1, 2}}, cb2::Partition{{1, 2}}, 0, 1};
            auto row_of = [&](const cb2::Bipartition& bp) {
                return std::find(matrix.rows.begin(), matrix.rows.end(), bp) - matrix.rows.begin();
            };
            auto col_of = [&](const cb2::Bipartition& bp) {
                return std::find(matrix.cols.begin(), matrix.cols.end(), bp) - matrix.cols.begin();
            };
            pass = matrix.entries[row_of(corner)][col_of(corner)] == cb2::LaurentPoly{1} &&
                   matrix.entries[row_of(dense)][col_of(corner)] == cb2::LaurentPoly::v(1) &&
                   matrix.entries[row_of(dense)][col_of(dense)] == cb2::LaurentPoly{1};
        }
        report.record("golden-weight-block-6", pass);
    }
}

int run_verify(const VerifyOptions& opt) {
    CheckReport report;
    verify_oracle_agreement(report, opt.max_m, opt.max_r);
    verify_structure(report, opt.max_m, opt.max_r);
    verify_involution_bijection(report, opt.max_m, opt.max_r);
    verify_specialization(report, opt.max_m, opt.max_r);
    verify_families(report, opt.max_m, opt.max_r);
    verify_goldens(report, opt.max_m, opt.max_r);

    std::ostringstream os;
    if (opt.format == "json") {
        json checks = json::array();
        for (const auto& [name, detail] : report.lines)
            checks.push_back(json{{"name", name}, {"pass", detail.empty()}, {"detail", detail}});
        os << json{{"ok", report.ok}, {"checks", std::move(checks)}}.dump(2) << "\n";
    } else {
        for (const auto& [name, detail] : report.lines)
            os << (detail.empty() ? "PASS " : "FAIL ") << name
               << (detail.empty() ? "" : ": " + detail) << "\n";
        os << (report.ok ? "all checks passed\n" : "verification FAILED\n");
    }
    write_out(opt.out, os.str());
    return report.ok ? 0 : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical bases of level-2 Fock spaces and constructible characters"};
    app.require_subcommand(1);

    CanonicalOptions canonical;
    auto* cmd_canonical = app.add_subcommand("canonical", "canonical basis matrix of degree m");
    cmd_canonical->add_option("--m", canonical.m, "degree")->required()->check(CLI::NonNegativeNumber);
    cmd_canonical->add_option("--r", canonical.r, "level offset r >= 0")->check(CLI::NonNegativeNumber);
    cmd_canonical->add_option("--k", canonical.k, "charge k");
    cmd_canonical->add_option("--weight-of", canonical.weight_of,
                              "restrict to the weight block of this bipartition, e.g. ((0,1,2),(1,2))");
    cmd_canonical->add_option("--weight-raw", canonical.weight_raw,
                              "restrict to the weight with these j:c simple-root coefficients");
    cmd_canonical->add_option("--format", canonical.format)
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    cmd_canonical->add_flag("--show-word", canonical.show_word, "include monomial words (json)");
    cmd_canonical->add_option("--out", canonical.out, "output file (default stdout)");

    ConstructibleOptions constructible;
    auto* cmd_constructible = app.add_subcommand("constructible", "constructible characters");
    cmd_constructible->add_option("--type", constructible.type)->required()
        ->check(CLI::IsMember({"B", "D"}));
    cmd_constructible->add_option("--m", constructible.m)->required()->check(CLI::NonNegativeNumber);
    cmd_constructible->add_option("--r", constructible.r)->check(CLI::NonNegativeNumber);
    cmd_constructible->add_option("--k", constructible.k);
    cmd_constructible->add_flag("--literal", constructible.literal,
                                "emit type D half-coefficients literally");
    cmd_constructible->add_option("--format", constructible.format)
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    cmd_constructible->add_option("--out", constructible.out);

    FamiliesOptions families_opt;
    auto* cmd_families = app.add_subcommand("families", "Rouquier family partition");
    cmd_families->add_option("--d", families_opt.d)->required()->check(CLI::PositiveNumber);
    cmd_families->add_option("--charges", families_opt.charges, "comma-separated charges")->required();
    cmd_families->add_option("--m", families_opt.m)->required()->check(CLI::NonNegativeNumber);
    cmd_families->add_option("--format", families_opt.format)
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    cmd_families->add_option("--out", families_opt.out);

    VerifyOptions verify;
    auto* cmd_verify = app.add_subcommand("verify", "run the property suites");
    cmd_verify->add_option("--max-m", verify.max_m)->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--max-r", verify.max_r)->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}));
    cmd_verify->add_option("--out", verify.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand(cmd_canonical)) return run_canonical(canonical);
        if (app.got_subcommand(cmd_constructible)) return run_constructible(constructible);
        if (app.got_subcommand(cmd_families)) return run_families(families_opt);
        return run_verify(verify);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
