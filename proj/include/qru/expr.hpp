#pragma once

// Shared textual grammar for elements of the plane, H, F and the form
// calculus:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' integer)? | '(' expr ')' ('^' integer)?
//   atom   := generator | rational | 'q'
// Whitespace is insignificant.  Negative exponents are allowed only on the
// invertible atoms q, x, y, K and a; a parenthesized expression takes only a
// nonnegative power.

#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "qru/hopf.hpp"
#include "qru/wz.hpp"

namespace qru {

struct ParseError : std::runtime_error {
  long pos;
  ParseError(const std::string& msg, long p)
      : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

namespace detail {

/// how one named generator is raised to a power
template <class E>
struct AtomRule {
  std::function<E(const Field&, long)> power;  // e may be negative iff invertible
  bool invertible;
};

template <class E>
using AtomTable = std::map<std::string, AtomRule<E>>;

template <class E>
class ExprParser {
 public:
  ExprParser(const Field& f, const AtomTable<E>& atoms, const std::string& text)
      : f_(f), atoms_(atoms), s_(text) {}

  E parse() {
    E r = expr();
    skip_ws();
    if (pos_ != static_cast<long>(s_.size())) throw ParseError("trailing input", pos_);
    return r;
  }

 private:
  const Field& f_;
  const AtomTable<E>& atoms_;
  std::string s_;
  long pos_ = 0;

  void skip_ws() {
    while (pos_ < static_cast<long>(s_.size()) && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < static_cast<long>(s_.size()) ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  long integer() {
    skip_ws();
    long start = pos_;
    bool neg = false;
    if (pos_ < static_cast<long>(s_.size()) && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= static_cast<long>(s_.size()) || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected an integer", start);
    long v = 0;
    while (pos_ < static_cast<long>(s_.size()) && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = v * 10 + (s_[pos_++] - '0');
    return neg ? -v : v;
  }

  E expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    E r = term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+')) {
        r = r + term();
      } else if (eat('-')) {
        r = r - term();
      } else {
        return r;
      }
    }
  }

  E term() {
    E r = factor();
    while (eat('*')) r = r * factor();
    return r;
  }

  E factor() {
    long start = pos_;
    if (eat('(')) {
      E inner = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      if (eat('^')) {
        long e = integer();
        if (e < 0) throw ParseError("negative power of a parenthesized expression", start);
        return inner.pow(e);
      }
      return inner;
    }
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return scalar_atom();
    std::string name = ident();
    if (name.empty()) throw ParseError("expected an atom", pos_);
    if (name == "q") {
      long e = eat('^') ? integer() : 1;
      return Scalar::q(f_, e) * E::one(f_);
    }
    auto it = atoms_.find(name);
    if (it == atoms_.end()) throw ParseError("unknown generator '" + name + "'", start);
    long e = eat('^') ? integer() : 1;
    if (e < 0 && !it->second.invertible)
      throw ParseError("negative power of the nilpotent generator '" + name + "'", start);
    return it->second.power(f_, e);
  }

  std::string ident() {
    skip_ws();
    long start = pos_;
    while (pos_ < static_cast<long>(s_.size()) &&
           (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  E scalar_atom() {
    skip_ws();
    std::string num;
    while (pos_ < static_cast<long>(s_.size()) && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      num += s_[pos_++];
    std::string den = "1";
    long save = pos_;
    skip_ws();
    if (pos_ < static_cast<long>(s_.size()) && s_[pos_] == '/') {
      ++pos_;
      skip_ws();
      den.clear();
      while (pos_ < static_cast<long>(s_.size()) &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        den += s_[pos_++];
      if (den.empty()) {
        pos_ = save;
        den = "1";
      }
    }
    Rat v(num + "/" + den);
    v.canonicalize();
    Scalar c(f_, v);
    if (eat('^')) {
      long e = integer();
      if (e < 0) throw ParseError("negative power of a rational", pos_);
      c = c.pow(e);
    }
    return c * E::one(f_);
  }
};

template <class E>
E power_mod(const Field& f, const E& g, long e) {
  return g.pow(((e % f.N) + f.N) % f.N);
}

inline const AtomTable<Plane>& plane_atoms() {
  static AtomTable<Plane> t = {
      {"x", {[](const Field& f, long e) { return power_mod(f, Plane::x(f), e); }, true}},
      {"y", {[](const Field& f, long e) { return power_mod(f, Plane::y(f), e); }, true}},
  };
  return t;
}

inline const AtomTable<HEl>& h_atoms() {
  static AtomTable<HEl> t = {
      {"K", {[](const Field& f, long e) { return HEl::K(f, e); }, true}},
      {"Xp", {[](const Field& f, long e) { return HEl::Xp(f).pow(e); }, false}},
      {"Xm", {[](const Field& f, long e) { return HEl::Xm(f).pow(e); }, false}},
  };
  return t;
}

inline const AtomTable<FEl>& f_atoms() {
  static AtomTable<FEl> t = {
      {"a", {[](const Field& f, long e) { return FEl::a(f, e); }, true}},
      {"b", {[](const Field& f, long e) { return FEl::b(f).pow(e); }, false}},
      {"c", {[](const Field& f, long e) { return FEl::c(f).pow(e); }, false}},
      {"d", {[](const Field& f, long e) { return f_expand_d(f).pow(e); }, false}},
  };
  return t;
}

inline const AtomTable<WZEl>& wz_atoms() {
  static AtomTable<WZEl> t = {
      {"x", {[](const Field& f, long e) { return power_mod(f, WZEl::x(f), e); }, true}},
      {"y", {[](const Field& f, long e) { return power_mod(f, WZEl::y(f), e); }, true}},
      {"dx", {[](const Field& f, long e) { return WZEl::dx(f).pow(e); }, false}},
      {"dy", {[](const Field& f, long e) { return WZEl::dy(f).pow(e); }, false}},
  };
  return t;
}

/// "(c)" then "*name^e" pieces; the bare coefficient when there are none
inline std::string format_term(const Scalar& c,
                               const std::vector<std::pair<std::string, int>>& gens) {
  std::string s = "(" + c.str() + ")";
  for (const auto& [name, e] : gens) {
    if (e == 0) continue;
    s += "*" + name;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

template <class Terms, class KeyGens>
std::string format_element(const Terms& terms, KeyGens key_gens) {
  std::string s;
  for (const auto& [k, c] : terms) {
    if (!s.empty()) s += " + ";
    s += format_term(c, key_gens(k));
  }
  return s.empty() ? "0" : s;
}

}  // namespace detail

inline Plane parse_plane(const Field& f, const std::string& text) {
  return detail::ExprParser<Plane>(f, detail::plane_atoms(), text).parse();
}
inline HEl parse_h(const Field& f, const std::string& text) {
  return detail::ExprParser<HEl>(f, detail::h_atoms(), text).parse();
}
inline FEl parse_f(const Field& f, const std::string& text) {
  return detail::ExprParser<FEl>(f, detail::f_atoms(), text).parse();
}
inline WZEl parse_wz(const Field& f, const std::string& text) {
  return detail::ExprParser<WZEl>(f, detail::wz_atoms(), text).parse();
}

inline std::string format_plane(const Plane& z) {
  return detail::format_element(z.terms(), [](const Plane::Key& k) {
    return std::vector<std::pair<std::string, int>>{{"x", k.first}, {"y", k.second}};
  });
}
inline std::string format_h(const HEl& u) {
  return detail::format_element(u.terms(), [](const HEl::Key& k) {
    return std::vector<std::pair<std::string, int>>{{"Xm", k[0]}, {"K", k[1]}, {"Xp", k[2]}};
  });
}
inline std::string format_f(const FEl& u) {
  return detail::format_element(u.terms(), [](const FEl::Key& k) {
    return std::vector<std::pair<std::string, int>>{{"a", k[0]}, {"b", k[1]}, {"c", k[2]}};
  });
}
inline std::string format_wz(const WZEl& w) {
  return detail::format_element(w.terms(), [](const WZEl::Key& k) {
    std::vector<std::pair<std::string, int>> g{{"x", k[0]}, {"y", k[1]}};
    if (k[2] == 1 || k[2] == 3) g.push_back({"dx", 1});
    if (k[2] == 2 || k[2] == 3) g.push_back({"dy", 1});
    return g;
  });
}

}  // namespace qru
