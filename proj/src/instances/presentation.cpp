#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include "hopfcyc/errors.hpp"
#include "hopfcyc/instances.hpp"

namespace hopfcyc {

namespace {

// Letters are signed generator indices: +i+1 for g_i, -(i+1) for g_i^{-1}.
using Letters = std::vector<int32_t>;

struct TermParser {
    const FieldId& field;
    const std::vector<Algebra::GeneratorInfo>& gens;
    std::string text;
    size_t pos = 0;

    void skip() { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; }

    bool eat(char c) {
        skip();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }

    bool peek(char c) {
        skip();
        return pos < text.size() && text[pos] == c;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " in '" + text + "'");
    }

    int gen_index(const std::string& n) {
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == n) return static_cast<int>(i);
        throw UnknownGenerator(n);
    }

    long parse_int() {
        skip();
        bool neg = eat('-');
        skip();
        size_t ds = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (ds == pos) fail("expected integer");
        long v = std::stol(text.substr(ds, pos - ds));
        return neg ? -v : v;
    }

    // one multiplicative term: scalar coefficient plus letter word
    std::pair<Scalar, Letters> parse_term() {
        Scalar coeff = Scalar::one(field);
        Letters word;
        bool first = true;
        for (;;) {
            skip();
            if (!first && !eat('*')) break;
            skip();
            if (pos >= text.size()) {
                if (first) fail("empty term");
                break;
            }
            char c = text[pos];
            if (c == '(') {
                // parenthesized scalar expression
                int depth = 0;
                size_t start = pos;
                do {
                    if (text[pos] == '(') ++depth;
                    if (text[pos] == ')') --depth;
                    ++pos;
                } while (pos < text.size() && depth > 0);
                if (depth != 0) fail("unbalanced parens");
                std::string inner = text.substr(start + 1, pos - start - 2);
                Scalar s = parse_scalar(field, inner);
                if (eat('^')) {
                    long e = parse_int();
                    Scalar r = Scalar::one(field);
                    Scalar b = e < 0 ? s.inverse() : s;
                    for (long i = 0; i < std::abs(e); ++i) r = r * b;
                    s = r;
                }
                coeff = coeff * s;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                long v = parse_int();
                Scalar s = Scalar::from_int(field, v);
                if (eat('^')) {
                    long e = parse_int();
                    Scalar r = Scalar::one(field);
                    Scalar b = e < 0 ? s.inverse() : s;
                    for (long i = 0; i < std::abs(e); ++i) r = r * b;
                    s = r;
                }
                coeff = coeff * s;
            } else if (c == 'q' && field.kind == FieldKind::Qq &&
                       (pos + 1 >= text.size() ||
                        !(std::isalnum(static_cast<unsigned char>(text[pos + 1])) || text[pos + 1] == '_'))) {
                ++pos;
                long e = 1;
                if (eat('^')) e = parse_int();
                coeff = coeff * Scalar::q_power(static_cast<int>(e));
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t start = pos;
                while (pos < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                    ++pos;
                std::string n = text.substr(start, pos - start);
                int gi = gen_index(n);
                long e = 1;
                if (eat('^')) e = parse_int();
                if (e < 0 && !gens[static_cast<size_t>(gi)].invertible) throw NonInvertibleInverse(n);
                for (long i = 0; i < std::abs(e); ++i)
                    word.push_back(e >= 0 ? gi + 1 : -(gi + 1));
            } else {
                break;
            }
            first = false;
        }
        if (first) fail("empty term");
        return {coeff, word};
    }

    // sum of terms
    std::vector<std::pair<Scalar, Letters>> parse_sum() {
        std::vector<std::pair<Scalar, Letters>> out;
        bool neg = eat('-');
        for (;;) {
            auto [c, w] = parse_term();
            out.emplace_back(neg ? -c : c, std::move(w));
            if (eat('+')) neg = false;
            else if (eat('-')) neg = true;
            else break;
        }
        skip();
        return out;
    }
};

BasisWord word_of_letters(const Letters& l) {
    BasisWord w;
    w.data = l;
    return w;
}

}  // namespace

Element PresentationAlgebra::reduce_letters(const std::vector<int32_t>& letters) const {
    Element out(field());
    std::deque<std::pair<Scalar, Letters>> queue;
    queue.emplace_back(Scalar::one(field()), letters);
    long steps = 0;
    while (!queue.empty()) {
        auto [coeff, w] = queue.front();
        queue.pop_front();
        if (++steps > 100000)
            throw ConfigError("rewriting did not terminate within the step budget");
        bool reduced = false;
        for (size_t p = 0; p < w.size() && !reduced; ++p) {
            for (const auto& rule : rules_) {
                size_t len = rule.lhs.size();
                if (p + len > w.size()) continue;
                if (!std::equal(rule.lhs.begin(), rule.lhs.end(), w.begin() + static_cast<long>(p)))
                    continue;
                for (const auto& [rw, rc] : rule.rhs.terms()) {
                    Letters nw(w.begin(), w.begin() + static_cast<long>(p));
                    nw.insert(nw.end(), rw.data.begin(), rw.data.end());
                    nw.insert(nw.end(), w.begin() + static_cast<long>(p + len), w.end());
                    queue.emplace_back(coeff * rc, std::move(nw));
                }
                reduced = true;
                break;
            }
        }
        if (!reduced) out.add(word_of_letters(w), coeff);
    }
    return out;
}

void PresentationAlgebra::check_confluence() const {
    auto nf = [&](const Letters& w) { return reduce_letters(w); };
    auto apply_rule_at = [&](const Letters& w, const Rule& r, size_t p) {
        Element out(field());
        for (const auto& [rw, rc] : r.rhs.terms()) {
            Letters nw(w.begin(), w.begin() + static_cast<long>(p));
            nw.insert(nw.end(), rw.data.begin(), rw.data.end());
            nw.insert(nw.end(), w.begin() + static_cast<long>(p + r.lhs.size()), w.end());
            Element e = nf(nw);
            out.add(e, rc);
        }
        return out;
    };
    auto letters_str = [&](const Letters& w) {
        std::string s;
        for (int32_t l : w) {
            if (!s.empty()) s += "*";
            s += gens_[static_cast<size_t>(std::abs(l) - 1)].name + (l < 0 ? "^-1" : "");
        }
        return s.empty() ? std::string("1") : s;
    };
    for (const auto& r1 : rules_)
        for (const auto& r2 : rules_) {
            size_t n1 = r1.lhs.size(), n2 = r2.lhs.size();
            // proper overlaps: a suffix of lhs1 equals a prefix of lhs2
            for (size_t k = 1; k < std::min(n1, n2) + 1; ++k) {
                if (k == n1 && k == n2) continue;  // identical rule application
                if (k > n1 || k > n2) break;
                if (!std::equal(r1.lhs.end() - static_cast<long>(k), r1.lhs.end(), r2.lhs.begin()))
                    continue;
                Letters w(r1.lhs.begin(), r1.lhs.end());
                w.insert(w.end(), r2.lhs.begin() + static_cast<long>(k), r2.lhs.end());
                Element a = apply_rule_at(w, r1, 0);
                Element b = apply_rule_at(w, r2, n1 - k);
                if (a != b) throw NonConfluentPresentation(letters_str(w));
            }
            // containment: lhs2 strictly inside lhs1
            if (n2 < n1) {
                for (size_t p = 0; p + n2 <= n1; ++p) {
                    if (!std::equal(r2.lhs.begin(), r2.lhs.end(), r1.lhs.begin() + static_cast<long>(p)))
                        continue;
                    Letters w(r1.lhs.begin(), r1.lhs.end());
                    Element a = apply_rule_at(w, r1, 0);
                    Element b = apply_rule_at(w, r2, p);
                    if (a != b) throw NonConfluentPresentation(letters_str(w));
                }
            }
        }
}

std::unique_ptr<PresentationAlgebra> PresentationAlgebra::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open presentation file: " + path);

    // first pass: field and generators
    FieldId field = FieldId::rationals();
    std::vector<GeneratorInfo> gens;
    std::vector<long> weights;
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        lines.push_back(line);
        if (key == "field") {
            std::string fs;
            ls >> fs;
            field = FieldId::parse(fs);
        } else if (key == "generator") {
            GeneratorInfo g;
            ls >> g.name;
            if (g.name.empty()) throw ParseError("generator without name");
            long w = 1;
            std::string opt;
            while (ls >> opt) {
                if (opt == "invertible") g.invertible = true;
                else if (opt.rfind("degree=", 0) == 0) w = std::stol(opt.substr(7));
                else throw ParseError("unknown generator option: " + opt);
            }
            if (w < 1) throw ParseError("generator degree must be >= 1");
            gens.push_back(g);
            weights.push_back(w);
        }
    }
    if (gens.empty()) throw ParseError("presentation has no generators");

    auto alg = std::unique_ptr<PresentationAlgebra>(new PresentationAlgebra(field));
    alg->gens_ = gens;
    alg->weights_ = weights;
    alg->name_ = "presentation";
    alg->coproducts_.assign(gens.size(), TensorElement(field));
    alg->counits_.assign(gens.size(), Scalar::zero(field));
    alg->antipodes_.assign(gens.size(), Element(field));
    std::vector<bool> has_cop(gens.size(), false), has_cou(gens.size(), false), has_ant(gens.size(), false);

    auto split_arrow = [](const std::string& s) {
        auto p = s.find("->");
        if (p == std::string::npos) throw ParseError("expected '->' in: " + s);
        return std::pair<std::string, std::string>(s.substr(0, p), s.substr(p + 2));
    };
    auto parse_element = [&](const std::string& s) {
        TermParser tp{field, gens, s};
        Element e(field);
        for (auto& [c, w] : tp.parse_sum()) e.add(word_of_letters(w), c);
        if (tp.pos != tp.text.size()) tp.fail("trailing input");
        return e;
    };
    auto parse_word = [&](const std::string& s) {
        TermParser tp{field, gens, s};
        auto [c, w] = tp.parse_term();
        tp.skip();
        if (tp.pos != tp.text.size() || !c.is_one())
            throw ParseError("rule left side must be a plain word: " + s);
        if (w.empty()) throw ParseError("rule left side cannot be empty: " + s);
        return w;
    };
    auto parse_tensor = [&](const std::string& s) {
        // sum of  term '|' term
        TensorElement out(field);
        TermParser tp{field, gens, s};
        bool neg = tp.eat('-');
        for (;;) {
            auto [c1, w1] = tp.parse_term();
            if (!tp.eat('|')) tp.fail("expected '|'");
            auto [c2, w2] = tp.parse_term();
            Scalar c = c1 * c2;
            out.add(TensorWord{word_of_letters(w1), word_of_letters(w2)}, neg ? -c : c);
            if (tp.eat('+')) neg = false;
            else if (tp.eat('-')) neg = true;
            else break;
        }
        tp.skip();
        if (tp.pos != tp.text.size()) tp.fail("trailing input");
        return out;
    };

    for (const auto& l : lines) {
        std::istringstream ls(l);
        std::string key;
        ls >> key;
        std::string rest;
        std::getline(ls, rest);
        if (key == "name") {
            std::istringstream rs(rest);
            rs >> alg->name_;
        } else if (key == "rule") {
            auto [lhs, rhs] = split_arrow(rest);
            Rule r;
            r.lhs = parse_word(lhs);
            r.rhs = parse_element(rhs);
            alg->rules_.push_back(std::move(r));
        } else if (key == "coproduct") {
            auto [g, rhs] = split_arrow(rest);
            TermParser tp{field, gens, g};
            auto [c, w] = tp.parse_term();
            if (!c.is_one() || w.size() != 1 || w[0] < 0)
                throw ParseError("coproduct left side must be one generator");
            alg->coproducts_[static_cast<size_t>(w[0] - 1)] = parse_tensor(rhs);
            has_cop[static_cast<size_t>(w[0] - 1)] = true;
        } else if (key == "counit") {
            auto [g, rhs] = split_arrow(rest);
            TermParser tp{field, gens, g};
            auto [c, w] = tp.parse_term();
            if (!c.is_one() || w.size() != 1 || w[0] < 0)
                throw ParseError("counit left side must be one generator");
            alg->counits_[static_cast<size_t>(w[0] - 1)] = parse_scalar(field, rhs);
            has_cou[static_cast<size_t>(w[0] - 1)] = true;
        } else if (key == "antipode") {
            auto [g, rhs] = split_arrow(rest);
            TermParser tp{field, gens, g};
            auto [c, w] = tp.parse_term();
            if (!c.is_one() || w.size() != 1 || w[0] < 0)
                throw ParseError("antipode left side must be one generator");
            alg->antipodes_[static_cast<size_t>(w[0] - 1)] = parse_element(rhs);
            has_ant[static_cast<size_t>(w[0] - 1)] = true;
        } else if (key == "flags") {
            std::istringstream rs(rest);
            std::string fl;
            while (rs >> fl) {
                if (fl == "commutative") alg->commutative_ = true;
                else if (fl == "cocommutative") alg->cocommutative_ = true;
                else if (fl == "finite") alg->finite_ = true;
                else throw ParseError("unknown flag: " + fl);
            }
        } else if (key == "field" || key == "generator") {
            // handled in the first pass
        } else {
            throw ParseError("unknown presentation line: " + l);
        }
    }

    for (size_t g = 0; g < gens.size(); ++g) {
        if (!has_cop[g] || !has_cou[g] || !has_ant[g])
            throw ParseError("generator " + gens[g].name + " missing coproduct/counit/antipode");
        if (gens[g].invertible) {
            // inverse letters are handled as grouplikes; insist on that shape
            TensorElement expect(field);
            expect.add(TensorWord{word_of_letters({static_cast<int32_t>(g) + 1}),
                                  word_of_letters({static_cast<int32_t>(g) + 1})},
                       Scalar::one(field));
            if (alg->coproducts_[g] != expect)
                throw ParseError("invertible generator " + gens[g].name + " must be grouplike");
            // implicit cancellation rules
            Rule r1, r2;
            r1.lhs = {static_cast<int32_t>(g) + 1, -(static_cast<int32_t>(g) + 1)};
            r1.rhs = Element(field, BasisWord{});
            r2.lhs = {-(static_cast<int32_t>(g) + 1), static_cast<int32_t>(g) + 1};
            r2.rhs = Element(field, BasisWord{});
            alg->rules_.push_back(r1);
            alg->rules_.push_back(r2);
        }
    }

    alg->check_confluence();
    return alg;
}

Element PresentationAlgebra::product_words(const BasisWord& a, const BasisWord& b) const {
    Letters w = a.data;
    w.insert(w.end(), b.data.begin(), b.data.end());
    return reduce_letters(w);
}

long PresentationAlgebra::degree(const BasisWord& w) const {
    long d = 0;
    for (int32_t l : w.data) d += weights_[static_cast<size_t>(std::abs(l) - 1)];
    return d;
}

std::vector<BasisWord> PresentationAlgebra::basis_up_to(long degree_bound) const {
    std::set<BasisWord> seen;
    std::vector<BasisWord> out{BasisWord{}};
    seen.insert(BasisWord{});
    std::deque<BasisWord> frontier{BasisWord{}};
    std::vector<int32_t> alphabet;
    for (size_t g = 0; g < gens_.size(); ++g) {
        alphabet.push_back(static_cast<int32_t>(g) + 1);
        if (gens_[g].invertible) alphabet.push_back(-(static_cast<int32_t>(g) + 1));
    }
    while (!frontier.empty()) {
        BasisWord w = frontier.front();
        frontier.pop_front();
        for (int32_t l : alphabet) {
            BasisWord nw = w;
            nw.data.push_back(l);
            if (degree(nw) > degree_bound) continue;
            if (seen.count(nw)) continue;
            Element red = reduce_letters(nw.data);
            if (red.size() == 1 && red.terms().begin()->first == nw &&
                red.terms().begin()->second.is_one()) {
                seen.insert(nw);
                out.push_back(nw);
                frontier.push_back(nw);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string PresentationAlgebra::word_to_string(const BasisWord& w) const {
    if (w.data.empty()) return "1";
    std::string s;
    for (int32_t l : w.data) {
        if (!s.empty()) s += "*";
        s += gens_[static_cast<size_t>(std::abs(l) - 1)].name + (l < 0 ? "^-1" : "");
    }
    return s;
}

std::vector<Algebra::GeneratorInfo> PresentationAlgebra::generators() const { return gens_; }

Element PresentationAlgebra::generator_power(int gen, int exponent) const {
    if (exponent < 0 && !gens_[static_cast<size_t>(gen)].invertible)
        throw NonInvertibleInverse(gens_[static_cast<size_t>(gen)].name);
    Letters w;
    for (int i = 0; i < std::abs(exponent); ++i)
        w.push_back(exponent >= 0 ? gen + 1 : -(gen + 1));
    return reduce_letters(w);
}

std::vector<std::pair<int, int>> PresentationAlgebra::factor_word(const BasisWord& w) const {
    std::vector<std::pair<int, int>> out;
    for (int32_t l : w.data) {
        int g = std::abs(l) - 1;
        int s = l > 0 ? 1 : -1;
        if (!out.empty() && out.back().first == g &&
            ((out.back().second > 0) == (s > 0)))
            out.back().second += s;
        else
            out.push_back({g, s});
    }
    return out;
}

TensorElement PresentationAlgebra::coproduct_word(const BasisWord& w) const {
    TensorElement acc = tensor_of_words(field(), TensorWord{BasisWord{}, BasisWord{}});
    for (int32_t l : w.data) {
        TensorElement dl(field());
        if (l > 0) {
            dl = coproducts_[static_cast<size_t>(l - 1)];
        } else {
            BasisWord inv;
            inv.data = {l};
            dl.add(TensorWord{inv, inv}, Scalar::one(field()));
        }
        acc = tensor_product_elements(acc, dl);
    }
    return acc;
}

Scalar PresentationAlgebra::counit_word(const BasisWord& w) const {
    Scalar out = Scalar::one(field());
    for (int32_t l : w.data) {
        const Scalar& c = counits_[static_cast<size_t>(std::abs(l) - 1)];
        out = out * (l > 0 ? c : c.inverse());
    }
    return out;
}

Element PresentationAlgebra::antipode_word(const BasisWord& w) const {
    Element acc = one();
    for (auto it = w.data.rbegin(); it != w.data.rend(); ++it) {
        int32_t l = *it;
        if (l > 0) {
            acc = product(acc, antipodes_[static_cast<size_t>(l - 1)]);
        } else {
            // S(g^-1) = S(g)^-1; for grouplike g that is the letter-inverse
            const Element& sg = antipodes_[static_cast<size_t>(-l - 1)];
            if (sg.size() != 1 || !sg.terms().begin()->second.is_one())
                throw ConfigError("antipode of inverse letter needs a single-word S(g)");
            BasisWord inv;
            const BasisWord& word = sg.terms().begin()->first;
            for (auto rit = word.data.rbegin(); rit != word.data.rend(); ++rit)
                inv.data.push_back(-*rit);
            acc = product(acc, reduce_letters(inv.data));
        }
    }
    return acc;
}

}  // namespace hopfcyc
