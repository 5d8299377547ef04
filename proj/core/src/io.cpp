#include "lslink/io.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "lslink/errors.hpp"

namespace lslink {

using nlohmann::json;

namespace {

ParsedInput make_knot(KnotHFunction k, std::optional<LaurentPoly1> alex, bool family,
                      std::string name) {
    ParsedInput in;
    in.kind = ParsedInput::Kind::Knot;
    in.knot = std::move(k);
    in.knot_alexander = std::move(alex);
    in.lspace_knot_family = family;
    in.name = std::move(name);
    return in;
}

ParsedInput make_link(LinkHFunction2 l, std::string name) {
    ParsedInput in;
    in.kind = ParsedInput::Kind::Link2;
    in.link = std::move(l);
    in.name = std::move(name);
    return in;
}

std::vector<std::string> split_words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

LaurentPoly1 poly1_from_json(const json& j) {
    if (j.is_string()) return parse_poly1(j.get<std::string>());
    if (!j.is_array()) throw ParseError("polynomial must be a string or a coefficient list");
    LaurentPoly1::Terms terms;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            throw ParseError("one-variable coefficient entries are [coeff, e_doubled]");
        terms[entry[1].get<int>()] += entry[0].get<std::int64_t>();
    }
    return LaurentPoly1(std::move(terms));
}

LaurentPoly2 poly2_from_json(const json& j) {
    if (j.is_string()) return parse_poly2(j.get<std::string>());
    if (!j.is_array()) throw ParseError("polynomial must be a string or a coefficient list");
    LaurentPoly2::Terms terms;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 3)
            throw ParseError("two-variable coefficient entries are [coeff, e1_doubled, e2_doubled]");
        terms[{entry[1].get<int>(), entry[2].get<int>()}] += entry[0].get<std::int64_t>();
    }
    return LaurentPoly2(std::move(terms));
}

KnotHFunction knot_window_from_json(const json& j) {
    if (!j.contains("radius") || !j.contains("values"))
        throw ParseError("h_window needs \"radius\" and \"values\"");
    int radius = j["radius"].get<int>();
    std::vector<std::int64_t> values = j["values"].get<std::vector<std::int64_t>>();
    return knot_from_window(std::move(values), radius);
}

KnotHFunction knot_from_json(const json& j, bool* family_flag) {
    if (j.is_string()) {
        ParsedInput in = expand_family(j.get<std::string>());
        if (in.kind != ParsedInput::Kind::Knot)
            throw ParseError("component family must be a knot family");
        if (family_flag) *family_flag = in.lspace_knot_family;
        return *in.knot;
    }
    if (j.contains("alexander")) {
        KnotHFunction k = h_from_alexander_knot(poly1_from_json(j["alexander"]));
        if (family_flag) *family_flag = false;
        return k;
    }
    if (j.contains("h_window")) {
        if (family_flag) *family_flag = false;
        return knot_window_from_json(j["h_window"]);
    }
    throw ParseError("knot input needs \"alexander\" or \"h_window\"");
}

std::vector<std::int64_t> core_from_rows(const json& rows, int radius, bool reduced) {
    int w = 2 * radius + 1;
    if (!rows.is_array() || static_cast<int>(rows.size()) != w)
        throw ParseError("h_table must have 2*radius+1 rows");
    std::vector<std::int64_t> core(static_cast<size_t>(w) * w, 0);
    for (int row = 0; row < w; ++row) {
        const auto& r = rows[row];
        if (!r.is_array() || static_cast<int>(r.size()) != w)
            throw ParseError("h_table rows must have 2*radius+1 values");
        int s2 = radius - row;  // rows top-down
        for (int col = 0; col < w; ++col) {
            int s1 = col - radius;
            std::int64_t v = r[col].get<std::int64_t>();
            if (reduced) v += std::max(0, -s1) + std::max(0, -s2);  // h -> H
            core[(s2 + radius) * w + (s1 + radius)] = v;
        }
    }
    return core;
}

json rows_to_json(const LinkHFunction2& l) {
    json rows = json::array();
    int r = l.radius();
    for (int s2 = r; s2 >= -r; --s2) {
        json row = json::array();
        for (int s1 = -r; s1 <= r; ++s1) row.push_back(l.at(s1, s2));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

ParsedInput expand_family(const std::string& family) {
    std::vector<std::string> words = split_words(family);
    if (words.empty()) throw ParseError("empty family name");
    const std::string& head = words[0];
    if (head == "unknot" && words.size() == 1) {
        KnotHFunction k = h_from_alexander_knot(families::unknot_alexander());
        return make_knot(std::move(k), families::unknot_alexander(), true, "unknot");
    }
    if (head == "torus" && words.size() == 3) {
        int p = 0, q = 0;
        try {
            p = std::stoi(words[1]);
            q = std::stoi(words[2]);
        } catch (const std::exception&) {
            throw ParseError("torus family needs integer parameters, got \"" + family + "\"");
        }
        LaurentPoly1 alex = torus_knot_alexander(p, q);
        KnotHFunction k = h_from_alexander_knot(alex);
        return make_knot(std::move(k), std::move(alex), true,
                         "torus " + words[1] + " " + words[2]);
    }
    if (head == "whitehead" && words.size() == 1) {
        LaurentPoly2 tilde = tilde_normalize(families::whitehead_alexander());
        LinkHFunction2 l =
            h_from_alexander_link(tilde, KnotHFunction::unknot(), KnotHFunction::unknot());
        return make_link(std::move(l), "whitehead");
    }
    if (head == "unlink2" && words.size() == 1)
        return make_link(LinkHFunction2::unlink(), "unlink2");
    throw ParseError("unknown family \"" + family +
                     "\" (expected unknot | torus P Q | whitehead | unlink2)");
}

ParsedInput parse_input_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("type")) throw ParseError("input needs a \"type\" of knot or link2");
    std::string type = j["type"].get<std::string>();
    if (type == "knot") {
        bool family = false;
        KnotHFunction k = knot_from_json(j, &family);
        std::optional<LaurentPoly1> alex;
        if (j.contains("alexander")) alex = poly1_from_json(j["alexander"]);
        if (j.contains("lspace_knot")) family = j["lspace_knot"].get<bool>();
        return make_knot(std::move(k), std::move(alex), family, "knot");
    }
    if (type != "link2") throw ParseError("\"type\" must be knot or link2");

    KnotHFunction comp1 = KnotHFunction::unknot();
    KnotHFunction comp2 = KnotHFunction::unknot();
    if (j.contains("components")) {
        const json& c = j["components"];
        if (c.contains("1")) comp1 = knot_from_json(c["1"], nullptr);
        if (c.contains("2")) comp2 = knot_from_json(c["2"], nullptr);
    }
    int provided = j.contains("alexander") + j.contains("alexander_tilde") + j.contains("h_table");
    if (provided != 1)
        throw ParseError("link input needs exactly one of alexander, alexander_tilde, h_table");
    if (j.contains("h_table")) {
        const json& t = j["h_table"];
        if (!t.contains("radius") || !t.contains("values"))
            throw ParseError("h_table needs \"radius\" and \"values\"");
        int radius = t["radius"].get<int>();
        bool reduced = t.contains("reduced") && t["reduced"].get<bool>();
        LinkHFunction2 l = link_from_table(core_from_rows(t["values"], radius, reduced),
                                           std::move(comp1), std::move(comp2), radius);
        return make_link(std::move(l), "link2");
    }
    LaurentPoly2 tilde = j.contains("alexander_tilde")
                             ? poly2_from_json(j["alexander_tilde"])
                             : tilde_normalize(poly2_from_json(j["alexander"]));
    return make_link(h_from_alexander_link(tilde, comp1, comp2), "link2");
}

std::string table_text(const LinkHFunction2& l) {
    int r = l.radius();
    std::ostringstream os;
    os << "H core, radius " << r << " (s1 rightward, s2 upward)\n";
    int width = 1;
    for (int s2 = -r; s2 <= r; ++s2)
        for (int s1 = -r; s1 <= r; ++s1)
            width = std::max(width, static_cast<int>(std::to_string(l.at(s1, s2)).size()));
    for (int s2 = r; s2 >= -r; --s2) {
        for (int s1 = -r; s1 <= r; ++s1)
            os << (s1 > -r ? " " : "") << std::setw(width) << l.at(s1, s2);
        os << "\n";
    }
    return os.str();
}

std::string table_text(const KnotHFunction& k) {
    std::ostringstream os;
    os << "s\tH\th\n";
    for (int s = -k.radius(); s <= k.radius(); ++s)
        os << s << '\t' << k.at(s) << '\t' << k.h(s) << '\n';
    return os.str();
}

std::string hfun_json(const LinkHFunction2& l) {
    json out;
    out["type"] = "link2";
    out["radius"] = l.radius();
    out["H"] = rows_to_json(l);
    json support = json::array();
    int r = l.radius();
    for (int s2 = r; s2 >= -r; --s2)
        for (int s1 = -r; s1 <= r; ++s1)
            if (l.h(s1, s2) != 0) support.push_back({s1, s2, l.h(s1, s2)});
    out["h_support"] = std::move(support);
    out["valid"] = l.is_valid();
    return out.dump();
}

std::string hfun_json(const KnotHFunction& k) {
    json out;
    out["type"] = "knot";
    out["radius"] = k.radius();
    json values = json::array();
    for (int s = -k.radius(); s <= k.radius(); ++s) values.push_back(k.at(s));
    out["H"] = std::move(values);
    out["valid"] = k.is_valid();
    return out.dump();
}

std::string dinv_rows_json(int p1, int p2,
                           const std::vector<std::pair<SpincLabel2, Rational>>& rows) {
    json out;
    out["p"] = {p1, p2};
    json jr = json::array();
    for (const auto& [label, d] : rows) jr.push_back({label.i1, label.i2, d.str()});
    out["rows"] = std::move(jr);
    return out.dump();
}

std::string casson_json(std::int64_t pp, std::int64_t pm, std::int64_t mp, std::int64_t mm) {
    json out;
    out["casson"] = {{"++", pp}, {"+-", pm}, {"-+", mp}, {"--", mm}};
    return out.dump();
}

std::string casson_knot_json(std::int64_t plus, std::int64_t minus) {
    json out;
    out["casson"] = {{"+", plus}, {"-", minus}};
    return out.dump();
}

std::string beta_json(std::int64_t beta) {
    json out;
    out["beta"] = beta;
    return out.dump();
}

std::string region_json(const LSpaceRegion& r) {
    json out;
    if (r.exact)
        out["lspace_region"] = {{"exact", true},
                                {"p1_greater_than", r.threshold1},
                                {"p2_greater_than", r.threshold2}};
    else
        out["lspace_region"] = {{"exact", false}, {"conditions", r.conditions}};
    return out.dump();
}

std::string genus_json(const GenusBoundReport& rep) {
    json out;
    json excluded = json::array();
    for (auto [g1, g2] : rep.excluded) excluded.push_back({g1, g2});
    out["genus_lower_bound"] = {
        {"min_total", rep.min_total}, {"cap", rep.cap}, {"excluded", std::move(excluded)}};
    return out.dump();
}

std::string nuplus_json(int nu) {
    json out;
    out["nu_plus"] = nu;
    return out.dump();
}

}  // namespace lslink
