#include "dynkin/specparse.hpp"

#include <algorithm>
#include <cctype>

#include "dynkin/errors.hpp"

namespace dynkin {

namespace {

void simple_edge(IntMatrix& c, int p, int q) {
    c.at(p, q) = -1;
    c.at(q, p) = -1;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

IntMatrix standard_cartan(char family, int n) {
    auto chain = [](IntMatrix& c, int from, int to) {
        for (int p = from; p + 1 <= to; ++p) simple_edge(c, p, p + 1);
    };
    IntMatrix c(n, n);
    for (int p = 0; p < n; ++p) c.at(p, p) = 2;
    switch (family) {
        case 'A':
            if (n < 1) throw ParseError("A_n requires n >= 1");
            chain(c, 0, n - 1);
            return c;
        case 'B':
            if (n < 2) throw ParseError("B_n requires n >= 2");
            chain(c, 1, n - 1);
            c.at(0, 1) = -2;  // node 1 short
            c.at(1, 0) = -1;
            return c;
        case 'C':
            if (n < 2) throw ParseError("C_n requires n >= 2");
            chain(c, 1, n - 1);
            c.at(0, 1) = -1;  // node 1 long
            c.at(1, 0) = -2;
            return c;
        case 'D':
            if (n < 3) throw ParseError("D_n requires n >= 3");
            simple_edge(c, 0, 2);
            simple_edge(c, 1, 2);
            chain(c, 2, n - 1);
            return c;
        case 'E':
            if (n < 6) throw ParseError("E_n requires n >= 6");
            simple_edge(c, 0, 1);
            simple_edge(c, 1, 2);
            simple_edge(c, 2, 3);  // branch node 4
            simple_edge(c, 2, 4);
            chain(c, 4, n - 1);
            return c;
        case 'F':
            if (n != 4) throw ParseError("F family has rank 4 only");
            simple_edge(c, 0, 1);
            simple_edge(c, 2, 3);
            c.at(1, 2) = -1;  // nodes 1,2 long
            c.at(2, 1) = -2;
            return c;
        case 'G':
            if (n != 2) throw ParseError("G family has rank 2 only");
            c.at(0, 1) = -1;  // node 1 long
            c.at(1, 0) = -3;
            return c;
        default:
            throw ParseError(std::string("unknown family '") + family + "'");
    }
}

DynkinDiagram standard_diagram(char family, int n) {
    return DynkinDiagram::from_cartan(standard_cartan(family, n));
}

namespace {

IntMatrix parse_gcm_literal(const std::string& text) {
    // [[a,b,...],[...],...]
    std::vector<std::vector<long long>> rows;
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip();
    if (i >= text.size() || text[i] != '[') throw ParseError("gcm must start with '['");
    ++i;
    while (true) {
        skip();
        if (i < text.size() && text[i] == ']') { ++i; break; }
        if (i >= text.size() || text[i] != '[') throw ParseError("expected '[' starting a gcm row");
        ++i;
        std::vector<long long> row;
        while (true) {
            skip();
            size_t j = i;
            while (j < text.size() && (text[j] == '-' || text[j] == '+' ||
                                       std::isdigit(static_cast<unsigned char>(text[j]))))
                ++j;
            if (j == i) throw ParseError("expected integer in gcm row");
            row.push_back(std::stoll(text.substr(i, j - i)));
            i = j;
            skip();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ']') { ++i; break; }
            throw ParseError("expected ',' or ']' in gcm row");
        }
        rows.push_back(std::move(row));
        skip();
        if (i < text.size() && text[i] == ',') { ++i; continue; }
    }
    const int n = static_cast<int>(rows.size());
    IntMatrix m(n, n);
    for (int p = 0; p < n; ++p) {
        if (static_cast<int>(rows[p].size()) != n) throw ParseError("gcm rows have unequal lengths");
        for (int q = 0; q < n; ++q) m.at(p, q) = Int(static_cast<long>(rows[p][q]));
    }
    return m;
}

}  // namespace

MarkedDiagram parse_marked_diagram(const std::string& raw) {
    std::string spec = strip(raw);
    if (spec.empty()) throw ParseError("empty diagram spec");

    int mark1 = -1;  // 1-based, -1 = default (last node)
    auto take_mark = [&](const std::string& inside) {
        std::string t = strip(inside);
        const std::string key = "mark=";
        if (t.rfind(key, 0) != 0) throw ParseError("expected mark=<node>");
        mark1 = std::stoi(t.substr(key.size()));
    };

    // Trailing "(mark=k)" or ";mark=k".
    if (!spec.empty() && spec.back() == ')') {
        size_t open = spec.rfind('(');
        if (open == std::string::npos) throw ParseError("unbalanced ')'");
        take_mark(spec.substr(open + 1, spec.size() - open - 2));
        spec = strip(spec.substr(0, open));
    } else {
        size_t semi = spec.rfind(';');
        if (semi != std::string::npos) {
            take_mark(spec.substr(semi + 1));
            spec = strip(spec.substr(0, semi));
        }
    }
    if (spec.rfind("name=", 0) == 0) spec = strip(spec.substr(5));

    DynkinDiagram diagram;
    if (spec.rfind("gcm=", 0) == 0) {
        diagram = DynkinDiagram::from_cartan(parse_gcm_literal(spec.substr(4)));
    } else {
        if (spec.size() < 2 || !std::isalpha(static_cast<unsigned char>(spec[0])))
            throw ParseError("bad diagram spec '" + raw + "'");
        char family = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[0])));
        int n = std::stoi(spec.substr(1));
        diagram = standard_diagram(family, n);
    }
    int n = diagram.node_count();
    int mark0 = (mark1 < 0) ? n - 1 : mark1 - 1;
    if (mark0 < 0 || mark0 >= n) throw ParseError("mark out of range");
    return MarkedDiagram(std::move(diagram), mark0);
}

MarkedPair parse_pair(const std::string& spec) {
    int depth = 0;
    size_t split = std::string::npos;
    for (size_t i = 0; i < spec.size(); ++i) {
        char ch = spec[i];
        if (ch == '[' || ch == '(') ++depth;
        if (ch == ']' || ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) throw ParseError("pair spec needs two diagrams separated by ','");
    return MarkedPair(parse_marked_diagram(spec.substr(0, split)),
                      parse_marked_diagram(spec.substr(split + 1)));
}

std::vector<long long> parse_weight_vector(const std::string& raw, int expected_size) {
    std::string spec = strip(raw);
    std::vector<long long> out;
    if (!spec.empty() && spec.front() == '[') {
        if (spec.back() != ']') throw ParseError("unbalanced '[' in weight");
        std::string body = spec.substr(1, spec.size() - 2);
        size_t i = 0;
        while (i < body.size()) {
            size_t j = body.find(',', i);
            std::string tok = strip(body.substr(i, j == std::string::npos ? std::string::npos : j - i));
            if (!tok.empty()) out.push_back(std::stoll(tok));
            if (j == std::string::npos) break;
            i = j + 1;
        }
    } else {
        // LiE-style digit string, one digit per node.
        for (char ch : spec) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw ParseError("weight digit string may contain digits only");
            out.push_back(ch - '0');
        }
    }
    if (expected_size >= 0) {
        if (static_cast<int>(out.size()) > expected_size)
            throw ParseError("weight has more entries than the diagram has nodes");
        out.resize(expected_size, 0);
    }
    return out;
}

std::pair<std::vector<long long>, std::vector<long long>> parse_two_sided(const std::string& raw) {
    std::string spec = strip(raw);
    int depth = 0;
    size_t split = std::string::npos;
    for (size_t i = 0; i < spec.size(); ++i) {
        if (spec[i] == '[') ++depth;
        if (spec[i] == ']') --depth;
        if (spec[i] == ',' && depth == 0) {
            split = i;
            break;
        }
    }
    if (split == std::string::npos)
        throw ParseError("two-sided weight needs \"[x...],[y...]\"");
    return {parse_weight_vector(spec.substr(0, split)), parse_weight_vector(spec.substr(split + 1))};
}

}  // namespace dynkin
