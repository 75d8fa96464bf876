#include "core/text.hpp"

#include <cctype>

namespace qdga {

namespace {

struct Lexer {
  std::string s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw std::invalid_argument(std::string("expected '") + c + "' in: " + s);
  }
  // number: [-]digits[/digits]
  bool peek_number() {
    skip();
    if (i >= s.size()) return false;
    return isdigit(static_cast<unsigned char>(s[i]));
  }
  Rat number() {
    skip();
    size_t j = i;
    while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("expected number in: " + s);
    std::string num = s.substr(i, j - i);
    i = j;
    if (accept('/')) {
      skip();
      size_t k = i;
      while (k < s.size() && isdigit(static_cast<unsigned char>(s[k]))) ++k;
      if (k == i) throw std::invalid_argument("expected denominator in: " + s);
      std::string den = s.substr(i, k - i);
      i = k;
      return parse_rat(num + "/" + den);
    }
    return parse_rat(num);
  }
  int integer() {
    skip();
    bool neg = accept('-');
    if (!neg) accept('+');
    skip();
    size_t j = i;
    while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("expected integer in: " + s);
    int v = std::stoi(s.substr(i, j - i));
    i = j;
    return neg ? -v : v;
  }
  bool peek_ident() {
    skip();
    if (i >= s.size()) return false;
    return isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_';
  }
  std::string ident() {
    skip();
    size_t j = i;
    while (j < s.size() &&
           (isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
      ++j;
    if (j < s.size() && s[j] == '*') ++j;  // trailing star is part of the name
    std::string r = s.substr(i, j - i);
    i = j;
    if (r.empty()) throw std::invalid_argument("expected name in: " + s);
    return r;
  }
};

// One scalar summand: number, number s, number T^k, s, T^k.
Scalar scalar_atom(Lexer& lx, RingKind ring) {
  Rat coeff(1);
  bool have_num = false;
  if (lx.peek_number()) {
    coeff = lx.number();
    have_num = true;
  }
  size_t save = lx.i;
  if (lx.peek_ident()) {
    std::string id = lx.ident();
    if (id == "s" && ring == RingKind::Dual) return Scalar::dual(Rat(0), coeff);
    if (id == "T" && ring == RingKind::Laurent) {
      int k = 1;
      if (lx.accept('^')) k = lx.integer();
      Scalar r = Scalar::t_power(k);
      Scalar c(ring, coeff);
      return r * c;
    }
    lx.i = save;  // not a scalar symbol; leave for the path parser
  }
  if (!have_num) throw std::invalid_argument("expected coefficient in: " + lx.s);
  return Scalar(ring, coeff);
}

Scalar scalar_expr(Lexer& lx, RingKind ring) {
  Scalar acc = Scalar::zero(ring);
  bool neg = lx.accept('-');
  for (;;) {
    Scalar a = scalar_atom(lx, ring);
    acc = neg ? acc - a : acc + a;
    if (lx.accept('+'))
      neg = false;
    else if (lx.accept('-'))
      neg = true;
    else
      break;
  }
  return acc;
}

Path path_atom(Lexer& lx, const Quiver& q) {
  std::vector<int> arrows;
  int idem_vertex = -1;
  for (;;) {
    std::string name = lx.ident();
    if (q.has_arrow(name)) {
      arrows.push_back(q.arrow_id(name));
    } else if (name.size() > 1 && name[0] == 'e' && q.has_vertex(name.substr(1))) {
      idem_vertex = q.vertex_id(name.substr(1));
    } else {
      throw std::invalid_argument("unknown generator in polynomial: " + name);
    }
    if (!lx.accept('.')) break;
  }
  if (!arrows.empty()) {
    Path p = Path::word(arrows);
    if (!path_composable(q, p)) throw std::invalid_argument("non-composable word in polynomial");
    return p;
  }
  if (idem_vertex < 0) throw std::invalid_argument("empty path");
  return Path::idem(idem_vertex);
}

}  // namespace

NCPoly parse_ncpoly(const Quiver& q, RingKind ring, const std::string& text) {
  Lexer lx{text};
  NCPoly r(ring);
  if (lx.done()) return r;
  bool neg = lx.accept('-');
  for (;;) {
    // term: [scalar factors '*']* [path]
    Scalar c = Scalar::one(ring);
    bool saw_path = false;
    bool saw_scalar = false;
    for (;;) {
      if (lx.accept('(')) {
        c = c * scalar_expr(lx, ring);
        lx.expect(')');
        saw_scalar = true;
      } else if (lx.peek_number()) {
        c = c * scalar_atom(lx, ring);
        saw_scalar = true;
      } else if (lx.peek_ident()) {
        // "s"/"T" scalar symbols vs path names: try scalar first
        size_t save = lx.i;
        Lexer probe = lx;
        std::string id = probe.ident();
        if ((id == "s" && ring == RingKind::Dual && !q.has_arrow("s")) ||
            (id == "T" && ring == RingKind::Laurent && !q.has_arrow("T"))) {
          c = c * scalar_atom(lx, ring);
          saw_scalar = true;
        } else {
          lx.i = save;
          Path p = path_atom(lx, q);
          r.add_term(p, neg ? -c : c);
          saw_path = true;
          break;
        }
      } else {
        break;
      }
      if (!lx.accept('*')) {
        // scalar-only term: legal only for zero
        break;
      }
    }
    if (!saw_path) {
      if (!saw_scalar || !c.is_zero())
        throw std::invalid_argument("scalar term without a path in: " + text);
    }
    if (lx.accept('+'))
      neg = false;
    else if (lx.accept('-'))
      neg = true;
    else
      break;
  }
  if (!lx.done()) throw std::invalid_argument("trailing input in polynomial: " + text);
  return r;
}

Scalar parse_scalar(RingKind ring, const std::string& text) {
  Lexer lx{text};
  bool paren = lx.accept('(');
  Scalar v = scalar_expr(lx, ring);
  if (paren) lx.expect(')');
  if (!lx.done()) throw std::invalid_argument("trailing input in scalar: " + text);
  return v;
}

std::vector<Scalar> parse_scalar_csv(RingKind ring, const std::string& csv) {
  std::vector<Scalar> out;
  size_t start = 0;
  int depth = 0;
  for (size_t i = 0; i <= csv.size(); ++i) {
    if (i == csv.size() || (csv[i] == ',' && depth == 0)) {
      std::string piece = csv.substr(start, i - start);
      if (!piece.empty()) out.push_back(parse_scalar(ring, piece));
      start = i + 1;
    } else if (csv[i] == '(') {
      ++depth;
    } else if (csv[i] == ')') {
      --depth;
    }
  }
  return out;
}

}  // namespace qdga
