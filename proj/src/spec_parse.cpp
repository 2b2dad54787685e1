#include <cctype>
#include <sstream>

#include "fgt/error.hpp"
#include "fgt/spec.hpp"

namespace fgt {

GroupSpec cyclic_spec(std::int64_t n) {
  GroupSpec s;
  s.kind = SpecKind::Cyclic;
  s.n = n;
  return s;
}

GroupSpec elemab_spec(std::int64_t p, std::int64_t k) {
  GroupSpec s;
  s.kind = SpecKind::ElemAbelian;
  s.n = p;
  s.k = k;
  return s;
}

GroupSpec order16_spec(const std::string& name) {
  order16_presentation(name);
  GroupSpec s;
  s.kind = SpecKind::Order16;
  s.name = name;
  return s;
}

GroupSpec dp_spec(std::vector<GroupSpec> parts) {
  if (parts.size() < 2) throw InvalidArgument("dp needs at least two factors");
  GroupSpec s;
  s.kind = SpecKind::DirectProduct;
  s.children = std::move(parts);
  return s;
}

namespace {
GroupSpec unary(SpecKind k, GroupSpec a) {
  GroupSpec s;
  s.kind = k;
  s.children.push_back(std::move(a));
  return s;
}
}  // namespace

GroupSpec hol_spec(GroupSpec a) { return unary(SpecKind::Holomorph, std::move(a)); }
GroupSpec wr_spec(GroupSpec a) { return unary(SpecKind::Wreath, std::move(a)); }
GroupSpec aut_spec(GroupSpec a) { return unary(SpecKind::AutOf, std::move(a)); }

GroupSpec sd_matrices_spec(GroupSpec p_part, GroupSpec acting, std::vector<IntMatrix> action,
                           std::int64_t modulus) {
  GroupSpec s;
  s.kind = SpecKind::Semidirect;
  s.children = {std::move(p_part), std::move(acting)};
  for (auto& m : action)
    for (auto& row : m)
      for (auto& v : row) v = ((v % modulus) + modulus) % modulus;
  s.action = std::move(action);
  s.modulus = modulus;
  return s;
}

GroupSpec sd_preset_spec(GroupSpec p_part, GroupSpec acting, std::string preset, Params params) {
  GroupSpec s;
  s.kind = SpecKind::Semidirect;
  s.children = {std::move(p_part), std::move(acting)};
  s.preset = std::move(preset);
  s.preset_params = std::move(params);
  return s;
}

GroupSpec pres_spec(std::string_view text) {
  GroupSpec s;
  s.kind = SpecKind::Presentation;
  Presentation p = parse_presentation(text);
  std::string canon = print_presentation(p);
  s.pres = canon;
  return s;
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view t) : text_(t) {}

  GroupSpec parse_all() {
    GroupSpec s = spec();
    skip();
    if (i_ != text_.size()) fail("trailing characters");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

  void skip() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  bool peek(char c) {
    skip();
    return i_ < text_.size() && text_[i_] == c;
  }

  void expect(char c) {
    skip();
    if (i_ >= text_.size() || text_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  std::string ident() {
    skip();
    std::size_t start = i_;
    while (i_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_' || text_[i_] == '^'))
      ++i_;
    if (start == i_) fail("expected a name");
    return std::string(text_.substr(start, i_ - start));
  }

  std::int64_t integer() {
    skip();
    bool neg = false;
    if (i_ < text_.size() && text_[i_] == '-') {
      neg = true;
      ++i_;
    }
    std::size_t start = i_;
    std::int64_t v = 0;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
      if (v > (INT64_MAX - 9) / 10) fail("integer too large");
      v = v * 10 + (text_[i_++] - '0');
    }
    if (start == i_) fail("expected an integer");
    return neg ? -v : v;
  }

  // Raw text up to the next top-level ',' or ')'.
  std::string raw_arg() {
    skip();
    std::size_t start = i_;
    int depth = 0;
    while (i_ < text_.size()) {
      char c = text_[i_];
      if ((c == ',' || c == ')') && depth == 0) break;
      if (c == '(' || c == '{' || c == '[') ++depth;
      if (c == ')' || c == '}' || c == ']') --depth;
      ++i_;
    }
    std::string r(text_.substr(start, i_ - start));
    while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.pop_back();
    if (r.empty()) fail("expected an argument");
    return r;
  }

  IntMatrix matrix() {
    IntMatrix m;
    expect('[');
    do {
      expect('[');
      std::vector<std::int64_t> row;
      do {
        row.push_back(integer());
      } while (peek(',') && (++i_, true));
      expect(']');
      m.push_back(std::move(row));
    } while (peek(',') && (++i_, true));
    expect(']');
    for (const auto& row : m)
      if (row.size() != m.size()) fail("matrix must be square");
    return m;
  }

  Params param_list() {
    Params ps;
    if (!peek('(')) return ps;
    ++i_;
    do {
      std::string k = ident();
      expect('=');
      ps[k] = integer();
    } while (peek(',') && (++i_, true));
    expect(')');
    return ps;
  }

  GroupSpec spec() {
    skip();
    std::size_t start = i_;
    std::string head = ident();
    if (head == "pres") {
      skip();
      if (!peek('{')) fail("expected '{'");
      int depth = 0;
      std::size_t j = i_;
      for (; j < text_.size(); ++j) {
        if (text_[j] == '{') ++depth;
        if (text_[j] == '}' && --depth == 0) break;
      }
      if (j >= text_.size()) fail("unterminated presentation");
      std::string_view body = text_.substr(start, j + 1 - start);
      i_ = j + 1;
      try {
        return pres_spec(body);
      } catch (const ParseError& e) {
        throw ParseError(std::string("in presentation: ") + e.what(), start + e.position());
      }
    }
    expect('(');
    GroupSpec s;
    if (head == "cyclic") {
      s = cyclic_spec(integer());
      if (s.n < 1) fail("cyclic order must be positive");
    } else if (head == "elemab") {
      std::int64_t p = integer();
      expect(',');
      s = elemab_spec(p, integer());
    } else if (head == "order16") {
      std::size_t at = i_;
      std::string nm = ident();
      bool known = false;
      for (const auto& n : order16_names()) known |= n == nm;
      if (!known) throw ParseError("unknown order-16 group name " + nm, at);
      s = order16_spec(nm);
    } else if (head == "dihedral" || head == "quasidihedral" || head == "dicyclic") {
      s.kind = head == "dihedral" ? SpecKind::Dihedral
               : head == "dicyclic" ? SpecKind::Dicyclic
                                    : SpecKind::Quasidihedral;
      s.n = integer();
    } else if (head == "dp") {
      std::vector<GroupSpec> parts{spec()};
      while (peek(',')) {
        ++i_;
        parts.push_back(spec());
      }
      if (parts.size() < 2) fail("dp needs at least two factors");
      s = dp_spec(std::move(parts));
    } else if (head == "hol" || head == "wr" || head == "aut") {
      GroupSpec a = spec();
      s = head == "hol" ? hol_spec(std::move(a)) : head == "wr" ? wr_spec(std::move(a)) : aut_spec(std::move(a));
    } else if (head == "sd") {
      GroupSpec pp = spec();
      expect(',');
      GroupSpec tt = spec();
      expect(',');
      std::string key = ident();
      expect('=');
      if (key == "preset") {
        std::string nm = ident();
        s = sd_preset_spec(std::move(pp), std::move(tt), nm, param_list());
      } else if (key == "action") {
        std::vector<IntMatrix> ms;
        if (peek('(')) {
          ++i_;
          do {
            ms.push_back(matrix());
          } while (peek(',') && (++i_, true));
          expect(')');
        } else {
          ms.push_back(matrix());
        }
        expect('@');
        std::int64_t m = integer();
        if (m < 2) fail("modulus must be at least 2");
        s = sd_matrices_spec(std::move(pp), std::move(tt), std::move(ms), m);
      } else {
        fail("expected action= or preset=");
      }
    } else if (head == "yprod") {
      s.kind = SpecKind::Central;
      s.children.push_back(spec());
      expect(',');
      s.children.push_back(spec());
      expect(',');
      s.za = raw_arg();
      expect(',');
      s.zb = raw_arg();
    } else if (head == "fam16p") {
      s.kind = SpecKind::Family16p;
      s.name = ident();
      expect(',');
      s.n = integer();
      expect(',');
      s.image = ident();
      expect(',');
      s.letters = ident();
    } else if (head == "fam16p2") {
      s.kind = SpecKind::Family16p2;
      s.name = ident();
      expect(',');
      s.n = integer();
      expect(',');
      s.preset = ident();
      s.preset_params = param_list();
    } else {
      throw ParseError("unknown constructor " + head, start);
    }
    if (s.kind == SpecKind::Family16p || s.kind == SpecKind::Family16p2) {
      bool known = false;
      for (const auto& n : order16_names()) known |= n == s.name;
      if (!known) throw ParseError("unknown order-16 group name " + s.name, start);
    }
    expect(')');
    return s;
  }

  std::string_view text_;
  std::size_t i_ = 0;
};

void print_params(std::ostringstream& o, const Params& ps) {
  if (ps.empty()) return;
  o << '(';
  bool first = true;
  for (const auto& [k, v] : ps) {
    o << (first ? "" : ",") << k << '=' << v;
    first = false;
  }
  o << ')';
}

void print_matrix(std::ostringstream& o, const IntMatrix& m) {
  o << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    o << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m[i].size(); ++j) o << (j ? "," : "") << m[i][j];
    o << ']';
  }
  o << ']';
}

void print_to(std::ostringstream& o, const GroupSpec& s) {
  switch (s.kind) {
    case SpecKind::Cyclic: o << "cyclic(" << s.n << ')'; return;
    case SpecKind::ElemAbelian: o << "elemab(" << s.n << ',' << s.k << ')'; return;
    case SpecKind::Order16: o << "order16(" << s.name << ')'; return;
    case SpecKind::Dihedral: o << "dihedral(" << s.n << ')'; return;
    case SpecKind::Quasidihedral: o << "quasidihedral(" << s.n << ')'; return;
    case SpecKind::Dicyclic: o << "dicyclic(" << s.n << ')'; return;
    case SpecKind::Presentation: o << s.pres; return;
    case SpecKind::DirectProduct:
      o << "dp(";
      for (std::size_t i = 0; i < s.children.size(); ++i) {
        if (i) o << ", ";
        print_to(o, s.children[i]);
      }
      o << ')';
      return;
    case SpecKind::Holomorph:
    case SpecKind::Wreath:
    case SpecKind::AutOf:
      o << (s.kind == SpecKind::Holomorph ? "hol(" : s.kind == SpecKind::Wreath ? "wr(" : "aut(");
      print_to(o, s.children[0]);
      o << ')';
      return;
    case SpecKind::Semidirect:
      o << "sd(";
      print_to(o, s.children[0]);
      o << ", ";
      print_to(o, s.children[1]);
      if (!s.preset.empty()) {
        o << ", preset=" << s.preset;
        print_params(o, s.preset_params);
      } else {
        o << ", action=";
        if (s.action.size() == 1) {
          print_matrix(o, s.action[0]);
        } else {
          o << '(';
          for (std::size_t i = 0; i < s.action.size(); ++i) {
            if (i) o << ',';
            print_matrix(o, s.action[i]);
          }
          o << ')';
        }
        o << '@' << s.modulus;
      }
      o << ')';
      return;
    case SpecKind::Central:
      o << "yprod(";
      print_to(o, s.children[0]);
      o << ", ";
      print_to(o, s.children[1]);
      o << ", " << s.za << ", " << s.zb << ')';
      return;
    case SpecKind::Family16p:
      o << "fam16p(" << s.name << ',' << s.n << ',' << s.image << ',' << s.letters << ')';
      return;
    case SpecKind::Family16p2:
      o << "fam16p2(" << s.name << ',' << s.n << ',' << s.preset;
      print_params(o, s.preset_params);
      o << ')';
      return;
  }
}

}  // namespace

GroupSpec parse_spec(std::string_view text) { return SpecParser(text).parse_all(); }

std::string print_spec(const GroupSpec& s) {
  std::ostringstream o;
  print_to(o, s);
  return o.str();
}

}  // namespace fgt
