#include "fgt/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "fgt/error.hpp"

namespace fgt {

// ---------------------------------------------------------------------------
// Word

Word Word::gen(std::uint32_t g, std::int64_t e) {
  Word w;
  w.append(g, e);
  return w;
}

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const auto& l : letters_) n += static_cast<std::size_t>(l.exp < 0 ? -l.exp : l.exp);
  return n;
}

void Word::append(std::uint32_t g, std::int64_t e) {
  if (e == 0) return;
  if (!letters_.empty() && letters_.back().gen == g) {
    letters_.back().exp += e;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({g, e});
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.append(it->gen, -it->exp);
  return w;
}

Word Word::pow(std::int64_t e) const {
  Word base = e < 0 ? inverse() : *this;
  if (e < 0) e = -e;
  // single letter: scale exponent directly
  if (base.letters_.size() == 1) return Word::gen(base.letters_[0].gen, base.letters_[0].exp * e);
  Word r;
  for (std::int64_t k = 0; k < e; ++k) r = r * base;
  return r;
}

Word operator*(const Word& a, const Word& b) {
  Word r = a;
  for (const auto& l : b.letters_) r.append(l.gen, l.exp);
  return r;
}

Word conjugate(const Word& a, const Word& b) { return b.inverse() * a * b; }

Word commutator(const Word& a, const Word& b) {
  return a.inverse() * b.inverse() * a * b;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::int64_t ipow(std::int64_t b, std::int64_t e, std::size_t pos) {
  if (e < 0) throw ParseError("negative power in integer expression", pos);
  std::int64_t r = 1;
  for (std::int64_t k = 0; k < e; ++k) r *= b;
  return r;
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t offset, const std::vector<std::string>* alphabet,
         const Params* params)
      : s_(text), off_(offset), alphabet_(alphabet), params_(params) {}

  std::size_t pos() const { return i_; }
  bool done() {
    skip();
    return i_ >= s_.size();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, off_ + i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip();
    if (i_ >= s_.size() || !ident_start(s_[i_])) fail("expected identifier");
    std::size_t st = i_;
    while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
    return std::string(s_.substr(st, i_ - st));
  }

  std::int64_t integer() {
    skip();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected integer");
    std::int64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_++] - '0');
      if (v > (std::int64_t{1} << 50)) fail("integer too large");
    }
    return v;
  }

  int gen_index(const std::string& name) const {
    if (!alphabet_) return -1;
    auto it = std::find(alphabet_->begin(), alphabet_->end(), name);
    return it == alphabet_->end() ? -1 : static_cast<int>(it - alphabet_->begin());
  }

  std::int64_t param(const std::string& name) {
    if (params_) {
      auto it = params_->find(name);
      if (it != params_->end()) return it->second;
    }
    fail("unknown symbol '" + name + "'");
  }

  // ---- integer expressions
  std::int64_t expr() {
    std::int64_t v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }
  std::int64_t term() {
    std::int64_t v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (peek('/')) {
        std::size_t at = i_;
        ++i_;
        std::int64_t d = unary();
        if (d == 0 || v % d != 0) throw ParseError("inexact division", off_ + at);
        v /= d;
      } else {
        return v;
      }
    }
  }
  std::int64_t unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    std::int64_t b = atom();
    if (peek('^')) {
      std::size_t at = i_;
      ++i_;
      return ipow(b, unary(), off_ + at);
    }
    return b;
  }
  std::int64_t atom() {
    if (accept('(')) {
      std::int64_t v = expr();
      expect(')');
      return v;
    }
    if (accept('{')) {
      std::int64_t v = expr();
      expect('}');
      return v;
    }
    skip();
    if (i_ < s_.size() && ident_start(s_[i_])) {
      std::size_t at = i_;
      std::string name = ident();
      if (gen_index(name) >= 0) throw ParseError("generator '" + name + "' in integer expression", off_ + at);
      return param(name);
    }
    return integer();
  }

  // ---- words
  Word word() {
    Word w = factor();
    while (accept('*')) w = w * factor();
    return w;
  }

  Word factor() {
    Word base = primary();
    while (accept('^')) base = apply_exponent(base);
    return base;
  }

  Word primary() {
    skip();
    if (accept('(')) {
      Word a = word();
      if (accept(',')) {
        Word b = word();
        expect(')');
        return commutator(a, b);
      }
      expect(')');
      return a;
    }
    if (i_ < s_.size() && s_[i_] == '1' &&
        (i_ + 1 >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_ + 1])))) {
      ++i_;
      return Word();
    }
    std::size_t at = i_;
    std::string name = ident();
    int g = gen_index(name);
    if (g < 0) throw ParseError("'" + name + "' is not a generator", off_ + at);
    return Word::gen(static_cast<std::uint32_t>(g));
  }

  // True if the bracketed text starting at i_ mentions a generator.
  bool group_mentions_generator(char open, char close) {
    std::size_t depth = 0, j = i_;
    for (; j < s_.size(); ++j) {
      if (s_[j] == open) ++depth;
      if (s_[j] == close && --depth == 0) break;
    }
    for (std::size_t k = i_; k < j;) {
      if (ident_start(s_[k])) {
        std::size_t st = k;
        while (k < j && ident_char(s_[k])) ++k;
        if (gen_index(std::string(s_.substr(st, k - st))) >= 0) return true;
      } else {
        ++k;
      }
    }
    return false;
  }

  Word apply_exponent(const Word& base) {
    skip();
    if (i_ >= s_.size()) fail("missing exponent");
    char c = s_[i_];
    if (c == '{' || c == '(') {
      char close = c == '{' ? '}' : ')';
      if (group_mentions_generator(c, close)) {
        ++i_;
        Word by = word();
        expect(close);
        return conjugate(base, by);
      }
      ++i_;
      std::int64_t e = expr();
      expect(close);
      return base.pow(e);
    }
    if (c == '-') {
      ++i_;
      skip();
      if (i_ < s_.size() && (s_[i_] == '{' || s_[i_] == '(')) {
        char open = s_[i_], close = open == '{' ? '}' : ')';
        if (group_mentions_generator(open, close)) fail("negated conjugating word");
        ++i_;
        std::int64_t e = expr();
        expect(close);
        return base.pow(-e);
      }
      if (i_ < s_.size() && ident_start(s_[i_])) {
        std::size_t at = i_;
        std::string name = ident();
        if (gen_index(name) >= 0) throw ParseError("negated conjugating generator", off_ + at);
        return base.pow(-param(name));
      }
      return base.pow(-integer());
    }
    if (ident_start(c)) {
      std::string name = ident();
      int g = gen_index(name);
      if (g >= 0) return conjugate(base, Word::gen(static_cast<std::uint32_t>(g)));
      return base.pow(param(name));
    }
    return base.pow(integer());
  }

 private:
  std::string_view s_;
  std::size_t off_;
  std::size_t i_ = 0;
  const std::vector<std::string>* alphabet_;
  const Params* params_;
};

// Splits at top-level occurrences of `sep`, returning (offset, piece) pairs.
std::vector<std::pair<std::size_t, std::string_view>> split_top(std::string_view s, char sep) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.emplace_back(start, s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.emplace_back(start, s.substr(start));
  return out;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& alphabet,
                const Params& params) {
  Parser ps(text, 0, &alphabet, &params);
  Word w = ps.word();
  if (!ps.done()) ps.fail("unexpected character in word");
  return w;
}

std::int64_t parse_int_expr(std::string_view text, const Params& params) {
  Parser ps(text, 0, nullptr, &params);
  std::int64_t v = ps.expr();
  if (!ps.done()) ps.fail("unexpected character in expression");
  return v;
}

std::vector<Word> parse_relators(std::string_view text, const std::vector<std::string>& alphabet,
                                 const Params& params) {
  std::vector<Word> out;
  for (auto [off, chain] : split_top(text, ',')) {
    if (blank(chain)) continue;
    std::vector<Word> terms;
    std::vector<bool> is_one;
    for (auto [off2, piece] : split_top(chain, '=')) {
      if (blank(piece)) throw ParseError("empty term in relator chain", off + off2);
      Parser ps(piece, off + off2, &alphabet, &params);
      terms.push_back(ps.word());
      if (!ps.done()) ps.fail("unexpected character in relator");
      is_one.push_back(trim(piece) == "1");
    }
    if (terms.size() == 1) {
      if (!terms[0].empty()) out.push_back(terms[0]);
      continue;
    }
    if (is_one.back()) {
      for (std::size_t k = 0; k + 1 < terms.size(); ++k)
        if (!terms[k].empty()) out.push_back(terms[k]);
    } else {
      // u = v = w  means u v^-1 and v w^-1
      for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
        Word r = terms[k] * terms[k + 1].inverse();
        if (!r.empty()) out.push_back(r);
      }
    }
  }
  return out;
}

Presentation parse_presentation(std::string_view text, const Params& overrides) {
  std::size_t base = 0;
  std::string_view body = text;
  {
    std::size_t a = 0;
    while (a < body.size() && std::isspace(static_cast<unsigned char>(body[a]))) ++a;
    if (body.substr(a, 5) == "pres{") {
      std::size_t close = body.rfind('}');
      if (close == std::string_view::npos || close < a + 5) throw ParseError("unterminated pres{", a);
      if (!blank(body.substr(close + 1))) throw ParseError("trailing text after pres{...}", close + 1);
      base = a + 5;
      body = body.substr(a + 5, close - a - 5);
    }
  }
  auto sections = split_top(body, ';');
  if (sections.size() < 2 || sections.size() > 3)
    throw ParseError("presentation needs 'generators; relators[; params]'", base);
  Presentation p;
  // generators
  {
    auto [off, gtext] = sections[0];
    for (auto [o2, g] : split_top(gtext, ',')) {
      std::string name = trim(g);
      if (name.empty()) throw ParseError("empty generator name", base + off + o2);
      if (!ident_start(name[0]) || !std::all_of(name.begin(), name.end(), ident_char))
        throw ParseError("bad generator name '" + name + "'", base + off + o2);
      if (std::find(p.alphabet.begin(), p.alphabet.end(), name) != p.alphabet.end())
        throw ParseError("duplicate generator '" + name + "'", base + off + o2);
      p.alphabet.push_back(name);
    }
  }
  // parameters
  if (sections.size() == 3) {
    auto [off, ptext] = sections[2];
    for (auto [o2, item] : split_top(ptext, ',')) {
      if (blank(item)) continue;
      auto eq = item.find('=');
      if (eq == std::string_view::npos) throw ParseError("parameter needs '='", base + off + o2);
      std::string name = trim(item.substr(0, eq));
      if (name.empty() || !ident_start(name[0]) || !std::all_of(name.begin(), name.end(), ident_char))
        throw ParseError("bad parameter name", base + off + o2);
      if (std::find(p.alphabet.begin(), p.alphabet.end(), name) != p.alphabet.end())
        throw ParseError("'" + name + "' is both a generator and a parameter", base + off + o2);
      Parser ps(item.substr(eq + 1), base + off + o2 + eq + 1, nullptr, &p.params);
      std::int64_t v = ps.expr();
      if (!ps.done()) ps.fail("unexpected character in parameter");
      p.params[name] = v;
    }
  }
  for (const auto& [k, v] : overrides) {
    if (std::find(p.alphabet.begin(), p.alphabet.end(), k) != p.alphabet.end())
      throw InvalidArgument("'" + k + "' is both a generator and a parameter");
    p.params[k] = v;
  }
  auto [roff, rtext] = sections[1];
  try {
    p.relators = parse_relators(rtext, p.alphabet, p.params);
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")),
                     base + roff + e.position());
  }
  p.relator_text = trim(rtext);
  return p;
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream s;
  s << "pres{";
  for (std::size_t i = 0; i < p.alphabet.size(); ++i) s << (i ? "," : "") << p.alphabet[i];
  s << "; ";
  if (!p.relator_text.empty()) {
    s << p.relator_text;
  } else {
    for (std::size_t i = 0; i < p.relators.size(); ++i)
      s << (i ? "," : "") << word_to_string(p.relators[i], p.alphabet) << "=1";
  }
  if (!p.params.empty()) {
    s << "; ";
    bool first = true;
    for (const auto& [k, v] : p.params) {
      s << (first ? "" : ",") << k << '=' << v;
      first = false;
    }
  }
  s << '}';
  return s.str();
}

std::string word_to_string(const Word& w, const std::vector<std::string>& alphabet) {
  if (w.empty()) return "1";
  std::ostringstream s;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) s << '*';
    first = false;
    s << alphabet.at(l.gen);
    if (l.exp != 1) {
      if (l.exp < 0)
        s << "^{" << l.exp << '}';
      else
        s << '^' << l.exp;
    }
  }
  return s.str();
}

// ---------------------------------------------------------------------------
// Evaluation

Permutation evaluate_word(const Word& w, const std::vector<Permutation>& images) {
  if (images.empty()) throw InvalidArgument("no generator images");
  Permutation r(images.front().degree());
  for (const auto& l : w.letters()) {
    if (l.gen >= images.size()) throw InvalidArgument("unmapped generator");
    r = r * power(images[l.gen], l.exp);
  }
  return r;
}

Permutation evaluate_word(const Word& w, const std::vector<std::string>& alphabet,
                          const std::map<std::string, Permutation>& images) {
  std::vector<Permutation> imgs;
  std::size_t degree = 0;
  for (const auto& [k, v] : images) degree = v.degree();
  if (degree == 0) throw InvalidArgument("no generator images");
  for (const auto& a : alphabet) {
    auto it = images.find(a);
    imgs.push_back(it == images.end() ? Permutation(degree) : it->second);
  }
  for (const auto& l : w.letters())
    if (!images.count(alphabet.at(l.gen)))
      throw InvalidArgument("unmapped symbol '" + alphabet.at(l.gen) + "'");
  return evaluate_word(w, imgs);
}

Elem evaluate_word(const Word& w, const ElementTable& t, const std::vector<Elem>& images) {
  Elem r = 0;
  for (const auto& l : w.letters()) {
    if (l.gen >= images.size()) throw InvalidArgument("unmapped generator");
    r = t.mul(r, t.pow(images[l.gen], l.exp));
  }
  return r;
}

MatGF evaluate_word(const Word& w, const std::vector<MatGF>& images) {
  if (images.empty()) throw InvalidArgument("no generator images");
  MatGF r = MatGF::identity(images.front().p(), images.front().n());
  for (const auto& l : w.letters()) {
    if (l.gen >= images.size()) throw InvalidArgument("unmapped generator");
    r = r * mat_pow(images[l.gen], l.exp);
  }
  return r;
}

bool check_relators(const Presentation& pres, const std::vector<Permutation>& images) {
  for (const auto& r : pres.relators)
    if (!evaluate_word(r, images).is_identity()) return false;
  return true;
}

bool check_relators(const Presentation& pres, const ElementTable& t,
                    const std::vector<Elem>& images) {
  for (const auto& r : pres.relators)
    if (evaluate_word(r, t, images) != 0) return false;
  return true;
}

bool check_relators(const Presentation& pres, const std::vector<MatGF>& images) {
  for (const auto& r : pres.relators)
    if (!evaluate_word(r, images).is_identity()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Coset enumeration (HLT)

namespace {

constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

class Enumerator {
 public:
  Enumerator(std::size_t ngens, std::size_t max_cosets)
      : cols_(2 * ngens), max_live_(max_cosets), max_total_(max_cosets * 20 + 1000) {
    new_coset();
  }

  std::vector<std::uint32_t> compile(const Word& w) const {
    std::vector<std::uint32_t> out;
    for (const auto& l : w.letters()) {
      std::uint32_t col = 2 * l.gen + (l.exp < 0 ? 1 : 0);
      std::int64_t n = l.exp < 0 ? -l.exp : l.exp;
      for (std::int64_t k = 0; k < n; ++k) out.push_back(col);
    }
    return out;
  }

  std::uint32_t& at(std::uint32_t c, std::uint32_t x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  bool alive(std::uint32_t c) const { return parent_[c] == c; }

  std::uint32_t new_coset() {
    if (live_ >= max_live_ || parent_.size() >= max_total_)
      throw CapExceeded("coset enumeration exceeded " + std::to_string(max_live_) + " cosets");
    auto c = static_cast<std::uint32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, kNone);
    ++live_;
    return c;
  }

  void define(std::uint32_t c, std::uint32_t x) {
    std::uint32_t d = new_coset();
    at(c, x) = d;
    at(d, x ^ 1u) = c;
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::uint32_t n = parent_[c];
      parent_[c] = r;
      c = n;
    }
    return r;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    queue_.push_back(b);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      std::uint32_t g = queue_[qi];
      for (std::uint32_t x = 0; x < cols_; ++x) {
        std::uint32_t d = at(g, x);
        if (d == kNone) continue;
        at(g, x) = kNone;
        if (at(d, x ^ 1u) == g) at(d, x ^ 1u) = kNone;
        std::uint32_t mu = rep(g), nu = rep(d);
        if (at(mu, x) != kNone) {
          merge(nu, at(mu, x));
        } else if (at(nu, x ^ 1u) != kNone) {
          merge(mu, at(nu, x ^ 1u));
        } else {
          at(mu, x) = nu;
          at(nu, x ^ 1u) = mu;
        }
      }
    }
  }

  void scan_and_fill(std::uint32_t c, const std::vector<std::uint32_t>& w) {
    if (w.empty()) return;
    std::uint32_t f = c, b = c;
    std::size_t i = 0, j = w.size();  // j is one past the last unscanned letter
    for (;;) {
      while (i < j && at(f, w[i]) != kNone) f = at(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, w[j - 1] ^ 1u) != kNone) b = at(b, w[--j] ^ 1u);
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1u) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  std::uint32_t cols_;
  std::size_t max_live_;
  std::size_t max_total_;
  std::size_t live_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> queue_;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup,
                        std::size_t max_cosets) {
  const std::size_t ngens = pres.alphabet.size();
  if (ngens == 0) throw InvalidArgument("presentation has no generators");
  Enumerator e(ngens, max_cosets);
  std::vector<std::vector<std::uint32_t>> rels;
  for (const auto& r : pres.relators) rels.push_back(e.compile(r));
  for (const auto& h : subgroup) e.scan_and_fill(0, e.compile(h));
  for (std::uint32_t c = 0; c < e.parent_.size(); ++c) {
    for (const auto& r : rels) {
      if (!e.alive(c)) break;
      e.scan_and_fill(c, r);
    }
    for (std::uint32_t x = 0; x < e.cols_ && e.alive(c); ++x)
      if (e.at(c, x) == kNone) e.define(c, x);
  }
  // Compact, keeping definition order.
  std::vector<std::uint32_t> renum(e.parent_.size(), kNone);
  std::uint32_t n = 0;
  for (std::uint32_t c = 0; c < e.parent_.size(); ++c)
    if (e.alive(c)) renum[c] = n++;
  CosetTable out;
  out.index = n;
  out.rows.assign(n, std::vector<std::uint32_t>(e.cols_));
  for (std::uint32_t c = 0; c < e.parent_.size(); ++c) {
    if (!e.alive(c)) continue;
    for (std::uint32_t x = 0; x < e.cols_; ++x) {
      std::uint32_t d = e.at(c, x);
      if (d == kNone) throw Error("coset table incomplete after enumeration");
      out.rows[renum[c]][x] = renum[e.rep(d)];
    }
  }
  std::vector<Permutation> gens;
  for (std::size_t g = 0; g < ngens; ++g) {
    std::vector<Point> img(n);
    for (std::uint32_t c = 0; c < n; ++c) img[c] = out.rows[c][2 * g];
    gens.push_back(Permutation(std::move(img)));
  }
  out.group = PermutationGroup(n, std::move(gens), pres.alphabet);
  return out;
}

}  // namespace fgt
