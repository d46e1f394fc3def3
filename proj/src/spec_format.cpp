#include "tpc/spec_format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace tpc {

SpecParseError::SpecParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
{
}

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_words(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::vector<std::string> split_on(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

RelationTerm parse_term(const std::string& raw, const Quiver& quiver, std::size_t line)
{
    const std::string text = trim(raw);
    if (text.empty()) throw SpecParseError(line, "empty relation term");
    RelationTerm term;
    std::string path_text = text;
    if (const auto star = text.find('*'); star != std::string::npos) {
        const std::string coeff = trim(text.substr(0, star));
        try {
            std::size_t used = 0;
            term.coefficient = std::stoll(coeff, &used);
            if (used != coeff.size()) throw std::invalid_argument(coeff);
        } catch (const std::exception&) {
            throw SpecParseError(line, "bad coefficient '" + coeff + "'");
        }
        path_text = trim(text.substr(star + 1));
    }
    for (const std::string& piece : split_on(path_text, '.')) {
        const std::string label = trim(piece);
        const auto arrow = quiver.find_arrow(label);
        if (!arrow) throw SpecParseError(line, "unknown arrow " + (label.empty() ? std::string("''") : label));
        if (!term.path.empty() && quiver.arrows[term.path.back()].target != quiver.arrows[*arrow].source) {
            throw SpecParseError(line, "non-composable path " + path_text);
        }
        term.path.push_back(*arrow);
    }
    if (term.path.size() < 2) throw SpecParseError(line, "relation path too short: " + path_text);
    return term;
}

}  // namespace

BoundQuiverSpec parse_spec(const std::string& text)
{
    BoundQuiverSpec spec;
    bool field_seen = false;
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string content = trim(raw);
        if (content.empty()) continue;
        const auto words = split_words(content);
        const std::string& directive = words[0];
        if (directive == "field") {
            if (words.size() != 2) throw SpecParseError(line, "expected: field <p>");
            if (field_seen) throw SpecParseError(line, "field declared twice");
            try {
                spec.field = Field(std::stoi(words[1]));
            } catch (const std::exception& e) {
                throw SpecParseError(line, std::string("bad field: ") + e.what());
            }
            field_seen = true;
        } else if (directive == "vertex") {
            if (words.size() != 2) throw SpecParseError(line, "expected: vertex <label>");
            for (const auto& v : spec.quiver.vertices) {
                if (v == words[1]) throw SpecParseError(line, "duplicate vertex " + words[1]);
            }
            spec.quiver.vertices.push_back(words[1]);
        } else if (directive == "arrow") {
            if (words.size() != 4) throw SpecParseError(line, "expected: arrow <label> <source> <target>");
            if (spec.quiver.find_arrow(words[1])) throw SpecParseError(line, "duplicate arrow " + words[1]);
            Arrow a;
            a.label = words[1];
            for (int k = 0; k < 2; ++k) {
                const std::string& v = words[2 + k];
                try {
                    (k == 0 ? a.source : a.target) = spec.quiver.vertex_index(v);
                } catch (const std::out_of_range&) {
                    throw SpecParseError(line, "unknown vertex " + v);
                }
            }
            spec.quiver.arrows.push_back(a);
        } else if (directive == "rel") {
            const std::string body = trim(content.substr(3));
            if (body.empty()) throw SpecParseError(line, "empty relation");
            Relation rel;
            for (const std::string& piece : split_on(body, '+')) {
                RelationTerm t = parse_term(piece, spec.quiver, line);
                t.coefficient = spec.field.reduce(t.coefficient);
                if (!rel.terms.empty()) {
                    const auto& first = rel.terms.front().path;
                    const auto& arrows = spec.quiver.arrows;
                    if (arrows[first.front()].source != arrows[t.path.front()].source ||
                        arrows[first.back()].target != arrows[t.path.back()].target) {
                        throw SpecParseError(line, "relation terms are not parallel");
                    }
                }
                rel.terms.push_back(std::move(t));
            }
            // Merge repeated paths and drop vanishing coefficients.
            Relation merged;
            for (const RelationTerm& t : rel.terms) {
                auto it = std::find_if(merged.terms.begin(), merged.terms.end(),
                                       [&](const RelationTerm& m) { return m.path == t.path; });
                if (it == merged.terms.end()) {
                    merged.terms.push_back(t);
                } else {
                    it->coefficient = spec.field.reduce(it->coefficient + t.coefficient);
                }
            }
            std::erase_if(merged.terms, [](const RelationTerm& t) { return t.coefficient == 0; });
            if (!merged.terms.empty()) spec.relations.push_back(std::move(merged));
        } else {
            throw SpecParseError(line, "unknown directive '" + directive + "'");
        }
    }
    if (spec.quiver.vertices.empty()) throw SpecParseError(line, "no vertices declared");
    return spec;
}

BoundQuiverSpec load_spec_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

std::string format_spec(const BoundQuiverSpec& spec)
{
    std::ostringstream out;
    out << "field " << spec.field.p() << '\n';
    for (const auto& v : spec.quiver.vertices) out << "vertex " << v << '\n';
    for (const auto& a : spec.quiver.arrows) {
        out << "arrow " << a.label << ' ' << spec.quiver.vertices[a.source] << ' ' << spec.quiver.vertices[a.target]
            << '\n';
    }
    for (const Relation& r : spec.relations) {
        out << "rel ";
        for (std::size_t t = 0; t < r.terms.size(); ++t) {
            if (t) out << " + ";
            if (r.terms[t].coefficient != 1) out << r.terms[t].coefficient << '*';
            for (std::size_t k = 0; k < r.terms[t].path.size(); ++k) {
                if (k) out << '.';
                out << spec.quiver.arrows[r.terms[t].path[k]].label;
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace tpc
