#include "eulerflag/ncpoly.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <optional>

namespace eulerflag {

const AbPoly& a_minus_b_power(int k) {
    static std::mutex guard;
    static std::deque<AbPoly> cache;
    if (k < 0) throw InvalidArgument("negative exponent for (a-b)^k");
    std::lock_guard lock(guard);
    if (cache.empty()) cache.push_back(AbPoly::one());
    const AbPoly step = AbPoly::monomial("a") - AbPoly::monomial("b");
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * step);
    return cache[static_cast<std::size_t>(k)];
}

AbPoly cd_expand(const CdPoly& p) {
    AbPoly out;
    for (const auto& [word, coef] : p.terms()) {
        // Every cd-word expands with all ab-coefficients equal to 1.
        std::vector<Word> expansion{Word{}};
        for (char letter : word) {
            std::vector<Word> next;
            next.reserve(expansion.size() * 2);
            for (const auto& prefix : expansion) {
                if (letter == 'c') {
                    next.push_back(prefix + 'a');
                    next.push_back(prefix + 'b');
                } else {
                    next.push_back(prefix + "ab");
                    next.push_back(prefix + "ba");
                }
            }
            expansion = std::move(next);
        }
        for (const auto& w : expansion) out.add_term(w, coef);
    }
    return out;
}

NotCdExpressible::NotCdExpressible(AbPoly residual)
    : Error("ab-polynomial is not expressible in c and d; residual " + render(residual)),
      residual_(std::move(residual)) {}

namespace {

// The lex-smallest ab-word in the expansion of a cd-word w is obtained by
// c -> a, d -> ab. That map is injective with image the words in which every
// b directly follows an a that is not itself claimed by an earlier b; invert it.
std::optional<Word> leading_preimage(const Word& ab_word) {
    Word cd_word;
    std::size_t i = 0;
    while (i < ab_word.size()) {
        if (ab_word[i] == 'b') return std::nullopt;
        if (i + 1 < ab_word.size() && ab_word[i + 1] == 'b') {
            cd_word += 'd';
            i += 2;
        } else {
            cd_word += 'c';
            i += 1;
        }
    }
    return cd_word;
}

std::optional<CdPoly> solve_cd(const AbPoly& p, AbPoly* residual) {
    // Forward substitution in lex order: the expansion of each cd basis word has
    // its leading word as its lex-minimum, so the basis is triangular and every
    // pivot is 1.
    AbPoly rest = p;
    CdPoly out;
    while (!rest.is_zero()) {
        const auto& [word, coef] = *rest.terms().begin();
        auto cd_word = leading_preimage(word);
        if (!cd_word) {
            if (residual) *residual = rest;
            return std::nullopt;
        }
        Rational c = coef;
        out.add_term(*cd_word, c);
        rest -= cd_expand(CdPoly::monomial(*cd_word, c));
    }
    return out;
}

template <Alphabet A>
NcPoly<A> reverse_words(const NcPoly<A>& p) {
    NcPoly<A> out;
    for (const auto& [word, coef] : p.terms()) out.add_term(Word(word.rbegin(), word.rend()), coef);
    return out;
}

template <Alphabet A, class Image>
NcPoly<A> apply_derivation(const NcPoly<A>& p, Image image) {
    NcPoly<A> out;
    for (const auto& [word, coef] : p.terms())
        for (std::size_t i = 0; i < word.size(); ++i)
            out.add_term(word.substr(0, i) + image(word[i]) + word.substr(i + 1), coef);
    return out;
}

}  // namespace

CdPoly ab_to_cd(const AbPoly& p) {
    AbPoly residual;
    auto solved = solve_cd(p, &residual);
    if (!solved) throw NotCdExpressible(residual);
    return *solved;
}

bool is_cd_expressible(const AbPoly& p) { return solve_cd(p, nullptr).has_value(); }

AbPoly star(const AbPoly& p) { return reverse_words(p); }
CdPoly star(const CdPoly& p) { return reverse_words(p); }

AbPoly derivation_g(const AbPoly& p) {
    return apply_derivation(p, [](char ch) { return ch == 'a' ? Word("ba") : Word("ab"); });
}

CdPoly derivation_g(const CdPoly& p) {
    return apply_derivation(p, [](char ch) { return ch == 'c' ? Word("d") : Word("cd"); });
}

void AbTensor::add_product(const AbPoly& left, const AbPoly& right, const Rational& coef) {
    for (const auto& [lw, lc] : left.terms())
        for (const auto& [rw, rc] : right.terms()) add_term({lw, rw}, coef * lc * rc);
}

AbTensor coproduct(const AbPoly& p) {
    AbTensor out;
    for (const auto& [word, coef] : p.terms())
        for (std::size_t i = 0; i < word.size(); ++i)
            out.add_term({word.substr(0, i), word.substr(i + 1)}, coef);
    return out;
}

// ---------------------------------------------------------------------------
// Text form

std::string render_word(std::string_view word) {
    if (word.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < word.size()) {
        std::size_t j = i;
        while (j < word.size() && word[j] == word[i]) ++j;
        out += word[i];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

namespace {

template <class Terms, class RenderKey, class IsUnit>
std::string render_terms(const Terms& terms, RenderKey render_key, IsUnit is_unit) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coef] : terms) {
        Rational magnitude = abs(coef);
        bool negative = coef < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (is_unit(key)) {
            out += to_string(magnitude);
        } else {
            if (magnitude != 1) out += to_string(magnitude) + "*";
            out += render_key(key);
        }
    }
    return out;
}

template <Alphabet A>
std::string render_poly(const NcPoly<A>& p) {
    return render_terms(
        p.terms(), [](const Word& w) { return render_word(w); },
        [](const Word& w) { return w.empty(); });
}

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    // Returns the terms and the alphabet letters seen ('\0' when only constants).
    std::pair<LinearCombination<Word>, char> parse() {
        LinearCombination<Word> out;
        skip_space();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (true) {
            skip_space();
            Rational sign = 1;
            if (!first) {
                if (at_end()) break;
                char op = text_[pos_];
                if (op != '+' && op != '-') fail("expected '+' or '-'");
                ++pos_;
                if (op == '-') sign = -1;
                skip_space();
            } else if (peek() == '-' && !(pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
                ++pos_;
                sign = -1;
                skip_space();
            }
            first = false;
            auto [coef, word] = parse_term();
            out.add_term(word, sign * coef);
        }
        return {out, letter_class_};
    }

private:
    std::pair<Rational, Word> parse_term() {
        Rational coef = 1;
        if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-') {
            std::size_t start = pos_;
            if (peek() == '-') ++pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (peek() == '/') {
                ++pos_;
                while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            }
            coef = parse_rational(text_.substr(start, pos_ - start));
            skip_space();
            if (peek() != '*') return {coef, Word{}};
            ++pos_;
            skip_space();
            if (peek() == '1') {
                ++pos_;
                return {coef, Word{}};
            }
        }
        Word word = parse_word();
        return {coef, word};
    }

    Word parse_word() {
        Word word;
        while (std::isalpha(static_cast<unsigned char>(peek()))) {
            char letter = text_[pos_++];
            char cls;
            if (letter == 'a' || letter == 'b') cls = 'a';
            else if (letter == 'c' || letter == 'd') cls = 'c';
            else fail(std::string("unknown letter '") + letter + "'");
            if (letter_class_ != '\0' && letter_class_ != cls) fail("mixed alphabets {a,b} and {c,d}");
            letter_class_ = cls;
            int repeat = 1;
            if (peek() == '^') {
                ++pos_;
                std::size_t start = pos_;
                while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                if (start == pos_) fail("expected exponent after '^'");
                repeat = std::stoi(std::string(text_.substr(start, pos_ - start)));
            }
            word.append(static_cast<std::size_t>(repeat), letter);
        }
        if (word.empty()) fail("expected a word");
        return word;
    }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    bool at_end() const { return pos_ >= text_.size(); }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial '" + std::string(text_) + "': " + what + " at offset " +
                         std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    char letter_class_ = '\0';
};

template <Alphabet A>
NcPoly<A> from_terms(const LinearCombination<Word>& terms) {
    NcPoly<A> out;
    for (const auto& [word, coef] : terms.terms()) out.add_term(word, coef);
    return out;
}

}  // namespace

std::string render(const AbPoly& p) { return render_poly(p); }
std::string render(const CdPoly& p) { return render_poly(p); }

std::string render(const AbTensor& t) {
    return render_terms(
        t.terms(),
        [](const std::pair<Word, Word>& key) {
            return "(" + render_word(key.first) + " # " + render_word(key.second) + ")";
        },
        [](const std::pair<Word, Word>&) { return false; });
}

AbPoly parse_ab(std::string_view text) {
    auto [terms, cls] = PolyParser(text).parse();
    if (cls == 'c') throw ParseError("expected an ab-polynomial: '" + std::string(text) + "'");
    return from_terms<Alphabet::ab>(terms);
}

CdPoly parse_cd(std::string_view text) {
    auto [terms, cls] = PolyParser(text).parse();
    if (cls == 'a') throw ParseError("expected a cd-polynomial: '" + std::string(text) + "'");
    return from_terms<Alphabet::cd>(terms);
}

std::variant<AbPoly, CdPoly> parse_poly(std::string_view text) {
    auto [terms, cls] = PolyParser(text).parse();
    if (cls == 'c') return from_terms<Alphabet::cd>(terms);
    return from_terms<Alphabet::ab>(terms);
}

}  // namespace eulerflag
