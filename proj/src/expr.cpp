#include "fada/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fada {

TwistedElement Value::element() const {
  if (is_scalar()) return TwistedElement::scalar(scalar());
  return std::get<TwistedElement>(v);
}

namespace {

class Parser {
 public:
  Parser(const Algebra& alg, const Peterson& pet, const std::string& text) : alg_(alg), pet_(pet), s_(text) {}

  Value run() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Value add(const Value& a, const Value& b, bool minus) const {
    if (a.is_scalar() && b.is_scalar()) return {minus ? a.scalar() - b.scalar() : a.scalar() + b.scalar()};
    return {minus ? a.element() - b.element() : a.element() + b.element()};
  }

  Value mul(const Value& a, const Value& b) const {
    if (a.is_scalar() && b.is_scalar()) return {a.scalar() * b.scalar()};
    if (a.is_scalar()) return {a.scalar() * b.element()};
    if (b.is_scalar()) return {alg_.mul_right(a.element(), b.scalar())};
    return {alg_.mul(a.element(), b.element())};
  }

  Value div(const Value& a, const Value& b) const {
    if (!b.is_scalar()) fail("division by an algebra element");
    if (b.scalar().is_zero()) fail("division by zero");
    if (a.is_scalar()) return {a.scalar() / b.scalar()};
    return {alg_.mul_right(a.element(), Scalar(1) / b.scalar())};
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) v = add(v, term(), false);
      else if (accept('-')) v = add(v, term(), true);
      else return v;
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) v = mul(v, unary());
      else if (accept('/')) v = div(v, unary());
      else return v;
    }
  }

  Value unary() {
    if (accept('-')) {
      Value v = unary();
      if (v.is_scalar()) return {-v.scalar()};
      return {-v.element()};
    }
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (!accept('^')) return base;
    skip();
    bool neg = accept('-');
    const long k = integer();
    if (base.is_scalar()) return {base.scalar().pow(static_cast<int>(neg ? -k : k))};
    if (neg) fail("negative power of an algebra element");
    return {alg_.pow(base.element(), static_cast<int>(k))};
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Lattice coordinates() {
    const RootDatum& d = alg_.datum();
    expect('(');
    Lattice l{};
    for (int i = 0; i < d.rank(); ++i) {
      if (i) expect(',');
      skip();
      const bool neg = accept('-');
      const long v = integer();
      l[i] = static_cast<int>(neg ? -v : v);
    }
    expect(')');
    return l;
  }

  int root_of(const Lattice& l) {
    const int r = alg_.datum().root_index(l);
    if (r < 0) fail("not a root");
    return r;
  }

  std::vector<int> word() {
    expect('(');
    expect('[');
    std::vector<int> w;
    if (!accept(']')) {
      do {
        w.push_back(static_cast<int>(integer()));
        if (w.back() > alg_.datum().rank()) fail("simple reflection index out of range");
      } while (accept(','));
      expect(']');
    }
    expect(')');
    return w;
  }

  int index_suffix(const std::string& id, std::size_t from) {
    const std::string digits = id.substr(from);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail("unknown identifier '" + id + "'");
    return std::stoi(digits);
  }

  Value primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    const ScalarContext& ctx = alg_.ctx();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return {ctx.constant(mpq_class(s_.substr(start, pos_ - start)))};
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unexpected '") + c + "'");
    const std::string id = identifier();
    const RootDatum& d = alg_.datum();
    skip();
    const bool call = pos_ < s_.size() && s_[pos_] == '(';

    if (id == "b" || id == "beta") return {ctx.beta()};
    if (id == "mu") return {ctx.mu()};
    if (id == "sigma") return {alg_.sigma_elt()};
    if (id == "Ypi") return {alg_.y_pi()};
    if (id == "x" && call) return {ctx.x_of(coordinates())};
    if (id == "kappa" && call) return {ctx.kappa(root_of(coordinates()))};
    if (id == "Z" && call) return {alg_.z_elt(root_of(coordinates()))};
    if (id == "frakX" && call) return {pet_.frak_x(d.from_word(word()))};
    if (id == "frakY" && call) return {pet_.frak_y(d.from_word(word()))};
    if ((id == "psi" || id == "pr") && call) {
      expect('(');
      Value v = expr();
      expect(')');
      return {alg_.pr(v.element())};
    }
    if (id == "eta" && call) {
      expect('(');
      const std::size_t close = s_.find(')', pos_);
      if (close == std::string::npos) fail("unterminated eta(");
      const std::string inner = s_.substr(pos_, close - pos_);
      pos_ = close + 1;
      try {
        return {TwistedElement::eta(d.parse_element(inner))};
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    if (id.size() >= 2 && id[0] == 'x') {
      const int i = index_suffix(id, 1);
      if (i < 1 || i > d.rank()) fail("variable out of range: " + id);
      return {ctx.x_simple(i)};
    }
    if (id.size() >= 2 && (id[0] == 'X' || id[0] == 'Y')) {
      const int i = index_suffix(id, 1);
      if (i > d.rank()) fail("index out of range: " + id);
      return {id[0] == 'X' ? alg_.demazure(i) : alg_.pushpull(i)};
    }
    fail("unknown identifier '" + id + "'");
  }

  const Algebra& alg_;
  const Peterson& pet_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprEvaluator::ExprEvaluator(const Algebra& alg) : alg_(alg), pet_(alg) {}

Value ExprEvaluator::eval(const std::string& text) const { return Parser(alg_, pet_, text).run(); }

std::string ExprEvaluator::render(const Value& v) const {
  if (v.is_scalar()) return alg_.ctx().to_string(v.scalar());
  return alg_.to_string(std::get<TwistedElement>(v.v));
}

std::string ExprEvaluator::render_x_basis(const TwistedElement& z, int L) const {
  const XExpansion e = alg_.expand_in_x_basis(z, L);
  if (e.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [u, c] : e.coeffs) {
    if (!first) os << " + ";
    first = false;
    os << '(' << alg_.ctx().to_string(c) << ")*";
    const auto w = alg_.datum().reduced_word(u);
    if (w.empty()) os << "eta()";
    for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "*X" : "X") << w[k];
  }
  return os.str();
}

std::string ExprEvaluator::render_presentation(const PresentationElement& p) const {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << alg_.ctx().to_string(c) << ")*";
    if (key.first) os << "frakY([0])*";
    os << "frakY([1,0])^" << key.second;
  }
  return os.str();
}

}  // namespace fada
