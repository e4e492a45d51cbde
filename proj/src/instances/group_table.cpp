#include <fstream>
#include <sstream>

#include "hopfcyc/errors.hpp"
#include "hopfcyc/instances.hpp"

namespace hopfcyc {

void GroupTable::validate() {
    int n = order();
    if (n == 0) throw InvalidGroupTable("empty table");
    if (static_cast<int>(mul.size()) != n) throw InvalidGroupTable("row count mismatch");
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != n) throw InvalidGroupTable("column count mismatch");
        for (int v : row)
            if (v < 0 || v >= n) throw InvalidGroupTable("entry out of range");
    }
    identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g) ok = mul[e][g] == g && mul[g][e] == g;
        if (ok) { identity = e; break; }
    }
    if (identity < 0) throw InvalidGroupTable("no two-sided identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw InvalidGroupTable("not associative at (" + element_names[a] + "," +
                                            element_names[b] + "," + element_names[c] + ")");
    inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul[a][b] == identity && mul[b][a] == identity) { inverse[a] = b; break; }
        if (inverse[a] < 0) throw InvalidGroupTable("no inverse for " + element_names[a]);
    }
    commutative = true;
    for (int a = 0; a < n && commutative; ++a)
        for (int b = 0; b < n; ++b)
            if (mul[a][b] != mul[b][a]) { commutative = false; break; }
}

GroupTable GroupTable::cyclic(int n) {
    GroupTable t;
    t.name = "Z" + std::to_string(n);
    for (int i = 0; i < n; ++i) t.element_names.push_back(i == 0 ? "e" : "z" + std::to_string(i));
    t.mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.mul[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % n;
    t.validate();
    return t;
}

GroupTable GroupTable::builtin(const std::string& name) {
    if (name == "Z2") return cyclic(2);
    if (name == "Z3") return cyclic(3);
    if (name == "Z4") return cyclic(4);
    if (name == "S3") {
        // permutations of {0,1,2}: e, r = (012), r2 = (021), s = (01), sr, sr2
        std::vector<std::array<int, 3>> perms = {
            {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
        GroupTable t;
        t.name = "S3";
        t.element_names = {"e", "r", "r2", "s", "sr", "sr2"};
        int n = 6;
        t.mul.assign(6, std::vector<int>(6));
        auto compose = [&](int a, int b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i) c[static_cast<size_t>(i)] = perms[static_cast<size_t>(a)][static_cast<size_t>(perms[static_cast<size_t>(b)][static_cast<size_t>(i)])];
            for (int k = 0; k < n; ++k)
                if (perms[static_cast<size_t>(k)] == c) return k;
            return -1;
        };
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) t.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = compose(a, b);
        t.validate();
        return t;
    }
    throw ConfigError("unknown builtin group: " + name);
}

GroupTable GroupTable::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open group table file: " + path);
    GroupTable t;
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks[0] == "group" && toks.size() >= 2 && t.name.empty()) {
            t.name = toks[1];
            continue;
        }
        if (toks[0] == "elements") {
            t.element_names.assign(toks.begin() + 1, toks.end());
            continue;
        }
        rows.push_back(toks);
    }
    if (t.element_names.empty()) throw InvalidGroupTable("missing 'elements' line in " + path);
    int n = t.order();
    if (static_cast<int>(rows.size()) != n)
        throw InvalidGroupTable("expected " + std::to_string(n) + " table rows in " + path);
    auto index_of = [&](const std::string& s) {
        for (int i = 0; i < n; ++i)
            if (t.element_names[static_cast<size_t>(i)] == s) return i;
        throw InvalidGroupTable("unknown element name '" + s + "' in " + path);
    };
    t.mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
            throw InvalidGroupTable("row " + std::to_string(i) + " has wrong length in " + path);
        for (int j = 0; j < n; ++j)
            t.mul[static_cast<size_t>(i)][static_cast<size_t>(j)] = index_of(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    if (t.name.empty()) t.name = "group";
    t.validate();
    return t;
}

}  // namespace hopfcyc
