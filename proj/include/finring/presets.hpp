#pragma once

#include <cctype>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "finring/decomposition.hpp"
#include "finring/galois.hpp"
#include "finring/structures.hpp"

namespace finring {

inline FiniteRing zmod(Coord modulus) {
  if (modulus < 2) throw Error(Errc::BadParameters, "zmod needs modulus >= 2");
  return make_ring({modulus}, {{{1}}}, {1}, "Z/" + std::to_string(modulus));
}

/// Z/p^N.
inline FiniteRing zmod(Coord p, unsigned N) {
  if (!arith::is_prime(p) || N < 1) throw Error(Errc::BadParameters, "zmod(p, N) needs prime p and N >= 1");
  FiniteRing r = zmod(arith::ipow(p, N));
  if (N == 1) r.set_label("F_" + std::to_string(p));
  return r;
}

/// base[x]/(x^k). Generator g_a x^i sits at index i * rank(base) + a.
inline FiniteRing trunc_poly(const FiniteRing& base, unsigned k) {
  if (k < 1) throw Error(Errc::BadParameters, "trunc_poly needs k >= 1");
  const std::size_t b = base.rank(), n = b * k;
  std::vector<Coord> orders;
  for (unsigned i = 0; i < k; ++i) orders.insert(orders.end(), base.orders().begin(), base.orders().end());
  ProductTable table(n, std::vector<std::vector<Coord>>(n, std::vector<Coord>(n, 0)));
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) {
      if (i + j >= k) continue;
      for (std::size_t a = 0; a < b; ++a)
        for (std::size_t c = 0; c < b; ++c)
          for (std::size_t l = 0; l < b; ++l) table[i * b + a][j * b + c][(i + j) * b + l] = base.product(a, c)[l];
    }
  std::vector<Coord> one(n, 0);
  for (std::size_t a = 0; a < b; ++a) one[a] = base.one()[a];
  return make_ring(std::move(orders), std::move(table), std::move(one),
                   base.label() + "[x]/(x^" + std::to_string(k) + ")");
}

/// base extended by `rank` square-zero variables x_1..x_r on which the maximal
/// ideal of base acts as zero: base (+) (base/m)^r with (b, v)(b', v') =
/// (b b', b v' + b' v). For a field base this is base[x_1..x_r]/(x_1..x_r)^2;
/// for Z/4 and r = 1 it is Z/4[x]/(x^2, 2x).
inline FiniteRing square_zero(const FiniteRing& base, unsigned rank) {
  const LocalityResult loc = is_local(base);
  if (!loc.local) throw Error(Errc::BadParameters, "square_zero needs a local base ring");
  const QuotientRing res = quotient(base, *loc.maximal_ideal);
  const FiniteRing& f = res.ring();
  const std::size_t b = base.rank(), s = f.rank(), n = b + rank * s;
  std::vector<Coord> orders = base.orders();
  for (unsigned c = 0; c < rank; ++c) orders.insert(orders.end(), f.orders().begin(), f.orders().end());
  ProductTable table(n, std::vector<std::vector<Coord>>(n, std::vector<Coord>(n, 0)));
  for (std::size_t a = 0; a < b; ++a)
    for (std::size_t c = 0; c < b; ++c)
      for (std::size_t l = 0; l < b; ++l) table[a][c][l] = base.product(a, c)[l];
  for (std::size_t a = 0; a < b; ++a) {
    const Element ga = res.project(base.generator(a));
    for (unsigned c = 0; c < rank; ++c)
      for (std::size_t j = 0; j < s; ++j) {
        const Element prod = f.mul(ga, f.generator(j));
        const std::size_t col = b + c * s + j;
        for (std::size_t l = 0; l < s; ++l) table[a][col][b + c * s + l] = table[col][a][b + c * s + l] = prod[l];
      }
  }
  std::vector<Coord> one(n, 0);
  for (std::size_t a = 0; a < b; ++a) one[a] = base.one()[a];
  std::string vars;
  for (unsigned c = 0; c < rank; ++c) vars += (c ? "," : "") + std::string(rank <= 3 ? std::string(1, "xyz"[c]) : "x" + std::to_string(c + 1));
  const bool field = loc.maximal_ideal->order() == 1;
  std::string label = base.label() + "[" + vars + "]/(" + vars + ")^2";
  if (!field) label = base.label() + "[" + vars + "]/((" + vars + ")^2, m(" + vars + "))";
  return make_ring(std::move(orders), std::move(table), std::move(one), std::move(label));
}

/// Direct product; generators of each factor are laid out consecutively.
inline FiniteRing product(const std::vector<FiniteRing>& factors) {
  if (factors.empty()) throw Error(Errc::BadParameters, "product of no rings");
  std::size_t n = 0;
  for (const auto& f : factors) n += f.rank();
  std::vector<Coord> orders, one;
  ProductTable table(n, std::vector<std::vector<Coord>>(n, std::vector<Coord>(n, 0)));
  std::string label;
  std::size_t off = 0;
  for (const auto& f : factors) {
    orders.insert(orders.end(), f.orders().begin(), f.orders().end());
    one.insert(one.end(), f.one().coords.begin(), f.one().coords.end());
    for (std::size_t i = 0; i < f.rank(); ++i)
      for (std::size_t j = 0; j < f.rank(); ++j)
        for (std::size_t l = 0; l < f.rank(); ++l) table[off + i][off + j][off + l] = f.product(i, j)[l];
    off += f.rank();
    label += (label.empty() ? "" : " x ") + f.label();
  }
  return make_ring(std::move(orders), std::move(table), std::move(one), std::move(label));
}

// ---------------------------------------------------------------------------
// Preset expressions, e.g. "trunc_poly(galois(2,1,2),2)".

/// Loader for file(path) arguments; set by the I/O layer.
using RingFileLoader = std::function<FiniteRing(const std::string&)>;

namespace detail {

class PresetParser {
 public:
  PresetParser(std::string_view src, const RingFileLoader& loader) : src_(src), loader_(loader) {}

  FiniteRing parse() {
    FiniteRing r = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("trailing input");
    return r;
  }

 private:
  using Arg = std::variant<Coord, FiniteRing>;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::BadParameters, "preset '" + std::string(src_) + "': " + why + " at offset " + std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a preset name");
    return std::string(src_.substr(start, pos_ - start));
  }

  Arg arg() {
    skip_ws();
    if (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '-')) {
      std::size_t start = pos_++;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return static_cast<Coord>(std::stoll(std::string(src_.substr(start, pos_ - start))));
    }
    return expr();
  }

  static Coord as_int(const Arg& a, const char* what) {
    if (!std::holds_alternative<Coord>(a)) throw Error(Errc::BadParameters, std::string(what) + " expects an integer");
    return std::get<Coord>(a);
  }
  static const FiniteRing& as_ring(const Arg& a, const char* what) {
    if (!std::holds_alternative<FiniteRing>(a)) throw Error(Errc::BadParameters, std::string(what) + " expects a ring");
    return std::get<FiniteRing>(a);
  }
  static unsigned as_unsigned(const Arg& a, const char* what) {
    Coord v = as_int(a, what);
    if (v < 0) throw Error(Errc::BadParameters, std::string(what) + " expects a non-negative integer");
    return static_cast<unsigned>(v);
  }

  FiniteRing expr() {
    const std::string name = ident();
    if (name == "file" || name == "from_file") {
      if (!eat('(')) fail("expected '('");
      std::size_t close = src_.find(')', pos_);
      if (close == std::string_view::npos) fail("unterminated file(...)");
      std::string path(src_.substr(pos_, close - pos_));
      pos_ = close + 1;
      if (!loader_) fail("no file loader available");
      return loader_(path);
    }
    std::vector<Arg> args;
    if (eat('(')) {
      if (!eat(')')) {
        do args.push_back(arg());
        while (eat(','));
        if (!eat(')')) fail("expected ')'");
      }
    }
    return build(name, args);
  }

  FiniteRing build(const std::string& name, const std::vector<Arg>& a) {
    if (name == "zmod") {
      if (a.size() == 1) return zmod(as_int(a[0], "zmod"));
      if (a.size() == 2) return zmod(as_int(a[0], "zmod"), as_unsigned(a[1], "zmod"));
    } else if (name == "galois") {
      if (a.size() == 3) return galois_ring(as_int(a[0], "galois"), as_unsigned(a[1], "galois"), as_unsigned(a[2], "galois"));
    } else if (name == "field") {
      if (a.size() == 2) return galois_ring(as_int(a[0], "field"), 1, as_unsigned(a[1], "field"));
    } else if (name == "trunc_poly") {
      if (a.size() == 2) return trunc_poly(as_ring(a[0], "trunc_poly"), as_unsigned(a[1], "trunc_poly"));
    } else if (name == "square_zero") {
      if (a.size() == 2) return square_zero(as_ring(a[0], "square_zero"), as_unsigned(a[1], "square_zero"));
    } else if (name == "product") {
      std::vector<FiniteRing> fs;
      for (const Arg& x : a) fs.push_back(as_ring(x, "product"));
      return product(fs);
    } else {
      fail("unknown preset '" + name + "'");
    }
    fail("wrong number of arguments for '" + name + "'");
  }

  std::string_view src_;
  const RingFileLoader& loader_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Builds a ring from a preset expression:
///   zmod(m) | zmod(p,N) | galois(p,N,n) | field(p,n) | trunc_poly(R,k)
///   | square_zero(R,r) | product(R,...) | file(path)
inline FiniteRing parse_preset(std::string_view expr, const RingFileLoader& loader = {}) {
  return detail::PresetParser(expr, loader).parse();
}

}  // namespace finring
