#include "cli_parse.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace hirzlog::cli {

using Json = nlohmann::ordered_json;

std::size_t SurfaceSpec::rank() const {
    switch (type) {
    case SurfaceType::P1:
    case SurfaceType::P2: return 1;
    case SurfaceType::F:
    case SurfaceType::BlP2: return 2;
    }
    return 0;
}

std::string SurfaceSpec::name() const {
    switch (type) {
    case SurfaceType::P1: return "P1";
    case SurfaceType::P2: return "P2";
    case SurfaceType::F: return "F" + std::to_string(e);
    case SurfaceType::BlP2: return "BlP2";
    }
    return "?";
}

SurfaceSpec parse_surface(std::string_view text) {
    if (text == "P1") return {SurfaceType::P1, 0};
    if (text == "P2") return {SurfaceType::P2, 0};
    if (text == "BlP2") return {SurfaceType::BlP2, 0};
    if (text.size() >= 2 && text[0] == 'F') {
        std::int64_t e = 0;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(text.data() + 1, last, e);
        if (ec == std::errc() && ptr == last && e >= 0) return {SurfaceType::F, e};
    }
    throw ParseError("unknown surface '" + std::string(text) + "' (expected P1, P2, F<e> with e >= 0, or BlP2)");
}

namespace {

// Scanner over the original text; whitespace is skipped, positions stay exact.
class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) error(std::string("expected '") + c + "'");
    }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    std::int64_t digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) error("expected integer");
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (ec != std::errc()) {
            pos_ = start;
            error("integer out of range");
        }
        return v;
    }

    std::int64_t signed_integer() {
        const char c = peek();
        if (c == '+' || c == '-') ++pos_;
        const std::int64_t v = digits();
        return c == '-' ? -v : v;
    }

    [[noreturn]] void error(const std::string& what) {
        skip_ws();
        std::ostringstream os;
        os << what << " at position " << (pos_ + 1) << "\n  " << text_ << "\n  " << std::string(pos_, ' ') << "^";
        throw ParseError(os.str());
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<std::int64_t> parse_blowup(Scanner& sc) {
    std::vector<std::int64_t> out{0, 0};
    bool seen[2] = {false, false};
    bool first = true;
    if (sc.at_digit()) {
        // a lone "0" is the zero class
        Scanner probe = sc;
        if (probe.digits() == 0 && probe.at_end()) {
            sc = probe;
            return out;
        }
    }
    while (!sc.at_end()) {
        std::int64_t sign = 1;
        if (sc.accept('-')) {
            sign = -1;
        } else if (!sc.accept('+') && !first) {
            sc.error("expected '+' or '-'");
        }
        const std::int64_t coeff = sc.at_digit() ? sc.digits() : 1;
        std::size_t slot = 0;
        if (sc.peek() == 'H') {
            slot = 0;
        } else if (sc.peek() == 'E') {
            slot = 1;
        } else {
            sc.error("expected 'H' or 'E'");
        }
        if (seen[slot]) sc.error(std::string("repeated '") + sc.peek() + "' term");
        sc.accept(sc.peek());
        seen[slot] = true;
        out[slot] = sign * coeff;
        first = false;
    }
    if (first) sc.error("expected a class such as 3H+2E");
    return out;
}

} // namespace

std::vector<std::int64_t> parse_divisor(std::string_view text, const SurfaceSpec& surface) {
    Scanner sc(text);
    std::vector<std::int64_t> out;
    switch (surface.type) {
    case SurfaceType::P1:
    case SurfaceType::P2: out.push_back(sc.signed_integer()); break;
    case SurfaceType::F:
        out.push_back(sc.signed_integer());
        sc.expect(',');
        out.push_back(sc.signed_integer());
        break;
    case SurfaceType::BlP2: out = parse_blowup(sc); break;
    }
    if (!sc.at_end()) sc.error("unexpected character");
    return out;
}

std::string format_divisor(const std::vector<std::int64_t>& c, const SurfaceSpec& surface) {
    switch (surface.type) {
    case SurfaceType::P1:
    case SurfaceType::P2: return std::to_string(c.at(0));
    case SurfaceType::F: return std::to_string(c.at(0)) + "," + std::to_string(c.at(1));
    case SurfaceType::BlP2: {
        std::string out;
        const char letters[2] = {'H', 'E'};
        for (std::size_t i = 0; i < 2; ++i) {
            const std::int64_t v = c.at(i);
            if (v == 0) continue;
            if (v < 0) out += "-";
            else if (!out.empty()) out += "+";
            if (v != 1 && v != -1) out += std::to_string(v < 0 ? -v : v);
            out += letters[i];
        }
        return out.empty() ? "0" : out;
    }
    }
    return "?";
}

std::vector<std::int64_t> parse_degrees(std::string_view text) {
    Scanner sc(text);
    std::vector<std::int64_t> out{sc.signed_integer()};
    std::optional<std::int64_t> declared;
    if (sc.accept(';')) {
        declared = out.front();
        out.clear();
        out.push_back(sc.signed_integer());
    }
    while (sc.accept(',')) out.push_back(sc.signed_integer());
    if (!sc.at_end()) sc.error("expected ','");
    if (declared && *declared != static_cast<std::int64_t>(out.size())) {
        throw ParseError("tuple '" + std::string(text) + "' declares " + std::to_string(*declared) +
                         " curves but lists " + std::to_string(out.size()));
    }
    return out;
}

std::vector<std::int64_t> ArrangementSpec::degrees() const {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::int64_t k = 0; k < counts[i]; ++k) out.push_back(classes[i].at(0));
    return out;
}

namespace {

[[noreturn]] void schema(const std::string& what) { throw ParseError("arrangement: " + what); }

std::int64_t int_field(const Json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) schema(where + ": missing \"" + key + "\"");
    if (!it->is_number_integer()) schema(where + ": \"" + key + "\" must be an integer");
    return it->get<std::int64_t>();
}

void only_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& where) {
    for (const auto& [k, v] : obj.items()) {
        bool known = false;
        for (const char* key : keys) known = known || k == key;
        if (!known) schema(where + ": unknown key \"" + k + "\"");
    }
}

} // namespace

ArrangementSpec parse_arrangement_json(const Json& root) {
    if (!root.is_object()) schema("top level must be an object");
    if (root.contains("arrangement")) return parse_arrangement_json(root.at("arrangement"));

    const auto s = root.find("surface");
    if (s == root.end() || !s->is_object()) schema("missing \"surface\" object");
    const auto t = s->find("type");
    if (t == s->end() || !t->is_string()) schema("surface: missing \"type\" string");

    ArrangementSpec out;
    const std::string type = t->get<std::string>();
    if (type == "P2") {
        only_keys(*s, {"type"}, "surface");
        only_keys(root, {"surface", "degrees"}, "top level");
        out.surface = {SurfaceType::P2, 0};
        const auto d = root.find("degrees");
        if (d == root.end() || !d->is_array()) schema("P2 arrangement needs a \"degrees\" array");
        for (const auto& v : *d) {
            if (!v.is_number_integer()) schema("degrees must be integers");
            out.classes.push_back({v.get<std::int64_t>()});
            out.counts.push_back(1);
        }
    } else if (type == "F" || type == "BlP2") {
        const bool hirz = type == "F";
        only_keys(*s, hirz ? std::initializer_list<const char*>{"type", "e"} : std::initializer_list<const char*>{"type"},
                  "surface");
        only_keys(root, {"surface", "curves"}, "top level");
        out.surface = hirz ? SurfaceSpec{SurfaceType::F, int_field(*s, "e", "surface")} : SurfaceSpec{SurfaceType::BlP2, 0};
        if (out.surface.e < 0) schema("surface: \"e\" must be >= 0");
        const auto c = root.find("curves");
        if (c == root.end() || !c->is_array()) schema("missing \"curves\" array");
        const char* k1 = hirz ? "a" : "H";
        const char* k2 = hirz ? "b" : "E";
        for (std::size_t i = 0; i < c->size(); ++i) {
            const Json& curve = (*c)[i];
            const std::string where = "curves[" + std::to_string(i) + "]";
            if (!curve.is_object()) schema(where + " must be an object");
            only_keys(curve, {k1, k2, "count"}, where);
            out.classes.push_back({int_field(curve, k1, where), int_field(curve, k2, where)});
            out.counts.push_back(curve.contains("count") ? int_field(curve, "count", where) : 1);
        }
    } else {
        schema("unknown surface type \"" + type + "\" (expected P2, F or BlP2)");
    }
    return out;
}

ArrangementSpec parse_arrangement_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_arrangement_json(j);
}

ArrangementSpec parse_arrangement_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_arrangement_text(os.str());
}

Json arrangement_to_json(const ArrangementSpec& a) {
    Json j;
    if (a.surface.type == SurfaceType::P2) {
        j["surface"] = {{"type", "P2"}};
        j["degrees"] = a.degrees();
        return j;
    }
    const bool hirz = a.surface.type == SurfaceType::F;
    j["surface"] = hirz ? Json{{"type", "F"}, {"e", a.surface.e}} : Json{{"type", "BlP2"}};
    Json curves = Json::array();
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
        Json c;
        c[hirz ? "a" : "H"] = a.classes[i].at(0);
        c[hirz ? "b" : "E"] = a.classes[i].at(1);
        c["count"] = a.counts[i];
        curves.push_back(std::move(c));
    }
    j["curves"] = std::move(curves);
    return j;
}

} // namespace hirzlog::cli
