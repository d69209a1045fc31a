#include "cb2/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cb2 {

json to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(json::array({e, c}));
    return out;
}

LaurentPoly laurent_from_json(const json& j) {
    LaurentPoly out;
    for (const auto& term : j)
        out += LaurentPoly::monomial(term.at(0).get<int>(), term.at(1).get<std::int64_t>());
    return out;
}

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) { return Partition{j.get<std::vector<int>>()}; }

json to_json(const Bipartition& bp) {
    return json{{"top", to_json(bp.top)},
                {"bottom", to_json(bp.bottom)},
                {"k", bp.k},
                {"r", bp.r}};
}

Bipartition bipartition_from_json(const json& j) {
    return Bipartition{partition_from_json(j.at("top")), partition_from_json(j.at("bottom")),
                       j.at("k").get<int>(), j.at("r").get<int>()};
}

json to_json(const Symbol& s) {
    return json{{"beta", s.beta()},
                {"gamma", s.gamma()},
                {"floor", s.floor()},
                {"k", s.k()},
                {"r", s.r()}};
}

Symbol symbol_from_json(const json& j) {
    return Symbol{j.at("beta").get<std::vector<int>>(), j.at("gamma").get<std::vector<int>>(),
                  j.at("floor").get<int>(), j.at("k").get<int>(), j.at("r").get<int>()};
}

json to_json(const FockVector& vec) {
    json terms = json::array();
    for (const auto& [bp, coeff] : vec.terms())
        terms.push_back(json{{"bipartition", to_json(bp)}, {"coeff", to_json(coeff)}});
    return json{{"terms", std::move(terms)}};
}

FockVector fock_vector_from_json(const json& j) {
    FockVector out;
    for (const auto& term : j.at("terms"))
        out.add_term(bipartition_from_json(term.at("bipartition")),
                     laurent_from_json(term.at("coeff")));
    return out;
}

json to_json(const ContentMultiset& c) {
    json out = json::array();
    for (const auto& [value, mult] : c.counts()) out.push_back(json::array({value, mult}));
    return out;
}

json to_json(const WeightVector& w) {
    json alpha = json::array();
    for (const auto& [j, c] : w.alpha_coefficients) alpha.push_back(json::array({j, c}));
    return json{{"highest_weight", w.highest_weight}, {"alpha_coefficients", std::move(alpha)}};
}

json to_json(const MonomialWord& w) {
    json out = json::array();
    for (const auto& [index, exponent] : w.letters) out.push_back(json::array({index, exponent}));
    return out;
}

json to_json(const DPartition& dp) {
    json comps = json::array();
    for (const auto& c : dp.components) comps.push_back(to_json(c));
    return json{{"components", std::move(comps)}, {"charges", dp.charges}};
}

namespace {

json rational_json(const Rational& q) { return json::array({q.num, q.den}); }

json d_label_json(const DLabel& label) {
    return json{{"pair", json::array({to_json(label.small), to_json(label.large)})}};
}

const char* tag_name(DTag tag) {
    switch (tag) {
    case DTag::first: return "I";
    case DTag::second: return "II";
    default: return nullptr;
    }
}

json tag_json(DTag tag) {
    const char* name = tag_name(tag);
    return name ? json(name) : json(nullptr);
}

} // namespace

json to_json(const ConstructibleB& comb) {
    json terms = json::array();
    for (const auto& [label, coeff] : comb.terms)
        terms.push_back(json{{"label", to_json(label)}, {"tag", nullptr}, {"coeff", rational_json(coeff)}});
    return json{{"type", "B"}, {"terms", std::move(terms)}};
}

json to_json(const ConstructibleD& comb, bool literal) {
    json terms = json::array();
    for (const auto& [label, coeff] : comb.terms) {
        if (literal && label.tag == DTag::none) {
            // Half-sum form: one half per ordered symbol of the orbit, so each
            // unordered label shows up twice with coefficient 1/2.
            for (int copy = 0; copy < 2; ++copy)
                terms.push_back(json{{"label", d_label_json(label)},
                                     {"tag", tag_json(label.tag)},
                                     {"coeff", rational_json(Rational{1, 2})}});
        } else {
            terms.push_back(json{{"label", d_label_json(label)},
                                 {"tag", tag_json(label.tag)},
                                 {"coeff", rational_json(coeff)}});
        }
    }
    return json{{"type", "D"}, {"terms", std::move(terms)}};
}

std::string format_partition(const Partition& p, int pad) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (int z = p.length(); z < pad; ++z) {
        os << (first ? "" : ",") << '0';
        first = false;
    }
    for (int part : p.parts()) {
        os << (first ? "" : ",") << part;
        first = false;
    }
    os << ')';
    return os.str();
}

std::string format_bipartition(const Bipartition& bp, int pad_top, int pad_bottom) {
    return "(" + format_partition(bp.top, pad_top) + "," + format_partition(bp.bottom, pad_bottom) +
           ")";
}

std::string format_dpartition(const DPartition& dp) {
    std::ostringstream os;
    os << '(';
    for (int s = 0; s < dp.d(); ++s) {
        if (s) os << ',';
        os << format_partition(dp.components[static_cast<std::size_t>(s)]);
    }
    os << ')';
    return os.str();
}

std::string format_dlabel(const DLabel& label) {
    std::string out =
        "{" + format_partition(label.small) + "," + format_partition(label.large) + "}";
    if (const char* name = tag_name(label.tag)) out += std::string(":") + name;
    return out;
}

namespace {

std::vector<int> parse_int_list(const std::string& text, std::size_t& pos) {
    auto fail = [&]() { throw std::invalid_argument("bad partition list: " + text); };
    if (pos >= text.size() || text[pos] != '(') fail();
    ++pos;
    std::vector<int> out;
    while (pos < text.size() && text[pos] != ')') {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(text.substr(pos), &used);
        } catch (const std::exception&) {
            fail();
        }
        out.push_back(value);
        pos += used;
        if (pos < text.size() && text[pos] == ',') ++pos;
    }
    if (pos >= text.size()) fail();
    ++pos; // closing parenthesis
    return out;
}

} // namespace

Bipartition parse_bipartition(const std::string& text, int k, int r) {
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
    auto fail = [&]() { throw std::invalid_argument("bad bipartition: " + text); };
    if (compact.empty() || compact.front() != '(') fail();
    std::size_t pos = 1;
    std::vector<int> top = parse_int_list(compact, pos);
    if (pos >= compact.size() || compact[pos] != ',') fail();
    ++pos;
    std::vector<int> bottom = parse_int_list(compact, pos);
    if (pos != compact.size() - 1 || compact[pos] != ')') fail();
    return Bipartition{Partition{std::move(top)}, Partition{std::move(bottom)}, k, r};
}

namespace {

std::string csv_quote(const std::string& text) { return "\"" + text + "\""; }

// Pad labels to uniform component lengths across the block, matching how the
// weight-block displays print their labels.
std::pair<int, int> label_padding(const BasisMatrix& matrix) {
    int pad_top = 0, pad_bottom = 0;
    for (const auto& bp : matrix.rows) {
        pad_top = std::max(pad_top, bp.top.length());
        pad_bottom = std::max(pad_bottom, bp.bottom.length());
    }
    return {pad_top, pad_bottom};
}

} // namespace

std::string matrix_to_csv(const BasisMatrix& matrix) {
    const auto [pad_top, pad_bottom] = label_padding(matrix);
    std::ostringstream os;
    os << csv_quote("");
    for (const auto& col : matrix.cols)
        os << ',' << csv_quote(format_bipartition(col, pad_top, pad_bottom));
    os << '\n';
    for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
        os << csv_quote(format_bipartition(matrix.rows[i], pad_top, pad_bottom));
        for (std::size_t j = 0; j < matrix.cols.size(); ++j)
            os << ',' << csv_quote(matrix.entries[i][j].str());
        os << '\n';
    }
    return os.str();
}

std::string laurent_to_latex(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::int64_t abs_c = c;
        if (first) {
            if (c < 0) { os << '-'; abs_c = -c; }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            abs_c = c < 0 ? -c : c;
        }
        if (abs_c != 1 || e == 0) os << abs_c;
        if (e != 0) {
            os << 'v';
            if (e != 1) os << "^{" << e << '}';
        }
    }
    return os.str();
}

std::string matrix_to_latex(const BasisMatrix& matrix) {
    const auto [pad_top, pad_bottom] = label_padding(matrix);
    std::ostringstream os;
    os << "\\begin{array}{c|" << std::string(matrix.cols.size(), 'c') << "}\n";
    for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
        os << format_bipartition(matrix.rows[i], pad_top, pad_bottom);
        for (std::size_t j = 0; j < matrix.cols.size(); ++j) {
            os << " & ";
            if (!matrix.entries[i][j].is_zero()) os << laurent_to_latex(matrix.entries[i][j]);
        }
        os << " \\\\\n";
    }
    os << "\\end{array}\n";
    return os.str();
}

} // namespace cb2
