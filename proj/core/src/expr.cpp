#include "galint/expr.hpp"

#include <algorithm>
#include <cctype>

namespace galint {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (pos_ < s_.size()) {
      if (s_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
      throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    }
    return e;
  }

 private:
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

  static Expr node(ExprNode::Kind kind, size_t offset, std::vector<Expr> children = {}) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->offset = offset;
    n->children = std::move(children);
    return n;
  }

  Expr sum() {
    Expr lhs = product();
    for (;;) {
      skip();
      size_t at = pos_;
      if (accept('+')) {
        lhs = node(ExprNode::Kind::Add, at, {lhs, product()});
      } else if (accept('-')) {
        lhs = node(ExprNode::Kind::Sub, at, {lhs, product()});
      } else {
        return lhs;
      }
    }
  }

  Expr product() {
    Expr lhs = unary();
    for (;;) {
      skip();
      size_t at = pos_;
      if (accept('*')) {
        lhs = node(ExprNode::Kind::Mul, at, {lhs, unary()});
      } else if (accept('/')) {
        lhs = node(ExprNode::Kind::Div, at, {lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    skip();
    size_t at = pos_;
    if (accept('-')) return node(ExprNode::Kind::Neg, at, {unary()});
    return power();
  }

  Expr power() {
    Expr base = atom();
    skip();
    size_t at = pos_;
    if (!accept('^')) return base;
    skip();
    bool negative = accept('-');
    skip();
    size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (digits == pos_) throw ParseError("exponent must be an integer literal", digits);
    std::string lit(s_.substr(digits, pos_ - digits));
    if (lit.size() > 3 || std::stol(lit) > kMaxExponent)
      throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), digits);
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Pow;
    n->offset = at;
    n->exponent = negative ? -std::stol(lit) : std::stol(lit);
    n->children = {base};
    return n;
  }

  Expr atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    size_t at = pos_;
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = sum();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::Integer;
      n->offset = at;
      n->value = mpz_class(std::string(s_.substr(at, pos_ - at)));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(at, pos_ - at));
      auto n = std::make_shared<ExprNode>();
      n->offset = at;
      if (name == "i") {
        n->kind = ExprNode::Kind::ImaginaryUnit;
      } else {
        n->kind = ExprNode::Kind::Variable;
        n->name = std::move(name);
      }
      return n;
    }
    if (c == ')') throw ParseError("unbalanced ')'", pos_);
    if (std::string_view("+*/^").find(c) != std::string_view::npos)
      throw ParseError("expected operand before '" + std::string(1, c) + "'", pos_);
    throw ParseError("unknown character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view s_;
  size_t pos_ = 0;
};

void collect(const Expr& e, std::vector<std::string>& out) {
  if (e->kind == ExprNode::Kind::Variable &&
      std::find(out.begin(), out.end(), e->name) == out.end())
    out.push_back(e->name);
  for (const Expr& c : e->children) collect(c, out);
}

// Generic lowering; Leaf maps variables to T, Div and Pow handle the
// target-specific restrictions.
template <typename T, typename Leaf, typename Div, typename Pow>
T lower(const Expr& e, const Leaf& leaf, const Div& div, const Pow& pow) {
  auto rec = [&](const Expr& c) { return lower<T>(c, leaf, div, pow); };
  switch (e->kind) {
    case ExprNode::Kind::Integer:
      return leaf(GaussRat(QRat(e->value)));
    case ExprNode::Kind::ImaginaryUnit:
      return leaf(GaussRat::i());
    case ExprNode::Kind::Variable:
      return leaf(e);
    case ExprNode::Kind::Add:
      return rec(e->children[0]) + rec(e->children[1]);
    case ExprNode::Kind::Sub:
      return rec(e->children[0]) - rec(e->children[1]);
    case ExprNode::Kind::Mul:
      return rec(e->children[0]) * rec(e->children[1]);
    case ExprNode::Kind::Div:
      return div(rec(e->children[0]), rec(e->children[1]), e->offset);
    case ExprNode::Kind::Neg:
      return -rec(e->children[0]);
    case ExprNode::Kind::Pow:
      return pow(rec(e->children[0]), e->exponent, e->offset);
  }
  throw InternalError("unknown expression node");
}

size_t index_of(const std::vector<std::string>& vars, const Expr& e) {
  auto it = std::find(vars.begin(), vars.end(), e->name);
  if (it == vars.end())
    throw InputError("unknown identifier '" + e->name + "' at offset " + std::to_string(e->offset));
  return static_cast<size_t>(it - vars.begin());
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::vector<std::string> identifiers(const Expr& e) {
  std::vector<std::string> out;
  collect(e, out);
  return out;
}

MPoly to_poly(const Expr& e, const std::vector<std::string>& vars) {
  size_t n = vars.size();
  struct Leaf {
    const std::vector<std::string>& vars;
    size_t n;
    MPoly operator()(const GaussRat& c) const { return MPoly(n, c); }
    MPoly operator()(const Expr& v) const { return MPoly::variable(n, index_of(vars, v)); }
  } leaf{vars, n};
  auto div = [](const MPoly& a, const MPoly& b, size_t at) {
    if (!b.is_constant())
      throw ParseError("division by a non-constant is not allowed in a polynomial", at);
    if (b.is_zero()) throw ParseError("division by zero", at);
    return a * b.constant_term().inverse();
  };
  auto pow = [](const MPoly& a, long k, size_t at) {
    if (k < 0) {
      if (!a.is_constant() || a.is_zero())
        throw ParseError("negative exponent is not allowed in a polynomial", at);
      return MPoly(a.nvars(), a.constant_term().pow(k));
    }
    return a.pow(static_cast<unsigned>(k));
  };
  return lower<MPoly>(e, leaf, div, pow);
}

MRatFn to_mratfn(const Expr& e, const std::vector<std::string>& vars) {
  size_t n = vars.size();
  struct Leaf {
    const std::vector<std::string>& vars;
    size_t n;
    MRatFn operator()(const GaussRat& c) const { return MRatFn(MPoly(n, c)); }
    MRatFn operator()(const Expr& v) const { return MRatFn(MPoly::variable(n, index_of(vars, v))); }
  } leaf{vars, n};
  auto div = [](const MRatFn& a, const MRatFn& b, size_t at) {
    if (b.is_zero()) throw ParseError("division by zero", at);
    return a / b;
  };
  auto pow = [n](const MRatFn& a, long k, size_t at) {
    if (k < 0 && a.is_zero()) throw ParseError("zero raised to a negative power", at);
    MPoly num = a.num().pow(static_cast<unsigned>(k < 0 ? -k : k));
    MPoly den = a.den().pow(static_cast<unsigned>(k < 0 ? -k : k));
    if (num.nvars() == 0) num = MPoly(n, GaussRat(1));
    if (den.nvars() == 0) den = MPoly(n, GaussRat(1));
    return k < 0 ? MRatFn(den, num) : MRatFn(num, den);
  };
  return lower<MRatFn>(e, leaf, div, pow);
}

RatFn to_ratfn(const Expr& e, const std::string& var) {
  struct Leaf {
    const std::string& var;
    RatFn operator()(const GaussRat& c) const { return RatFn(c); }
    RatFn operator()(const Expr& v) const {
      if (v->name != var)
        throw InputError("unknown identifier '" + v->name + "' at offset " + std::to_string(v->offset));
      return RatFn::x();
    }
  } leaf{var};
  auto div = [](const RatFn& a, const RatFn& b, size_t at) {
    if (b.is_zero()) throw ParseError("division by zero", at);
    return a / b;
  };
  auto pow = [](const RatFn& a, long k, size_t at) {
    if (k < 0 && a.is_zero()) throw ParseError("zero raised to a negative power", at);
    return a.pow(k);
  };
  return lower<RatFn>(e, leaf, div, pow);
}

GaussRat to_gauss(const Expr& e) {
  struct Leaf {
    GaussRat operator()(const GaussRat& c) const { return c; }
    GaussRat operator()(const Expr& v) const {
      throw InputError("expected a constant, found identifier '" + v->name + "' at offset " +
                       std::to_string(v->offset));
    }
  } leaf;
  auto div = [](const GaussRat& a, const GaussRat& b, size_t at) {
    if (b.is_zero()) throw ParseError("division by zero", at);
    return a / b;
  };
  auto pow = [](const GaussRat& a, long k, size_t at) {
    if (k < 0 && a.is_zero()) throw ParseError("zero raised to a negative power", at);
    return a.pow(k);
  };
  return lower<GaussRat>(e, leaf, div, pow);
}

}  // namespace galint
