#include "mink3/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace mink3 {

bool is_squarefree(unsigned n) {
  if (n == 0) return false;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

Scalar::Scalar(BigRat a, BigRat b, unsigned d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ == 0 || !is_squarefree(d_))
    throw InvalidInput("scalar field index must be squarefree and positive, got " + std::to_string(d));
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  canonicalize();
}

Scalar Scalar::rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  return Scalar(BigRat(num, den));
}

Scalar Scalar::sqrt_of(unsigned d) {
  if (d == 1) return Scalar(1);
  return Scalar(BigRat(0), BigRat(1), d);
}

void Scalar::canonicalize() {
  if (b_ == 0) d_ = 1;
}

unsigned Scalar::common_field(const Scalar& l, const Scalar& r) {
  if (l.d_ == r.d_) return l.d_;
  if (l.d_ == 1) return r.d_;
  if (r.d_ == 1) return l.d_;
  throw FieldMismatch("cannot mix sqrt(" + std::to_string(l.d_) + ") with sqrt(" +
                      std::to_string(r.d_) + ") values");
}

int Scalar::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(d) have opposite signs: compare a^2 with b^2*d.
  const BigRat a2 = a_ * a_;
  const BigRat b2d = b_ * b_ * d_;
  if (a2 > b2d) return sa;
  if (a2 < b2d) return sb;
  // a^2 == b^2 d with a, b != 0 would make sqrt(d) rational.
  throw InternalError("sqrt(" + std::to_string(d_) + ") compared equal to a rational");
}

int Scalar::cmp(const Scalar& l, const Scalar& r) {
  if (l == r) return 0;
  return (l - r).sign();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = common_field(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = common_field(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  const unsigned d = common_field(*this, o);
  if (b_ == 0 && o.b_ == 0) {
    a_ *= o.a_;
    d_ = 1;
    return *this;
  }
  // (a + b sqrt d)(a' + b' sqrt d) = (aa' + bb'd) + (ab' + a'b) sqrt d
  BigRat na = a_ * o.a_ + b_ * o.b_ * d;
  BigRat nb = a_ * o.b_ + o.a_ * b_;
  a_ = std::move(na);
  b_ = std::move(nb);
  d_ = d;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw InvalidInput("division by zero scalar");
  const unsigned d = common_field(*this, o);
  if (o.b_ == 0) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  // Rationalize by the conjugate: (a'+b' sqrt d)(a'-b' sqrt d) = a'^2 - b'^2 d.
  const BigRat den = o.a_ * o.a_ - o.b_ * o.b_ * d;
  if (den == 0) throw InternalError("zero field norm for nonzero scalar");
  Scalar conj(o.a_, -o.b_, d);
  *this *= conj;
  a_ /= den;
  b_ /= den;
  canonicalize();
  return *this;
}

namespace {

std::string rat_str(const BigRat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

}  // namespace

std::string Scalar::str() const {
  if (d_ == 1) return rat_str(a_);
  std::string out = rat_str(a_);
  if (b_.sign() > 0)
    out += '+' + rat_str(b_);
  else
    out += '-' + rat_str(-b_);
  out += "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

struct Cursor {
  std::string_view s;
  size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

BigInt parse_int(Cursor& c) {
  bool neg = false;
  if (c.eat('-'))
    neg = true;
  else
    c.eat('+');
  if (!std::isdigit(static_cast<unsigned char>(c.peek())))
    throw ParseError("expected digit in scalar at offset " + std::to_string(c.pos) + " of '" +
                     std::string(c.s) + "'");
  BigInt v = 0;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + (c.s[c.pos] - '0');
    ++c.pos;
  }
  return neg ? BigInt(-v) : v;
}

BigRat parse_rat(Cursor& c) {
  BigInt num = parse_int(c);
  if (c.eat('/')) {
    BigInt den = parse_int(c);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(c.s) + "'");
    return BigRat(num, den);
  }
  return BigRat(num);
}

// One term: either a rational, or [rational '*'] 'sqrt(' uint ')'.
// Returns (rational part, sqrt coefficient, d or 0 when no sqrt present).
struct Term {
  BigRat value;
  bool is_sqrt = false;
  unsigned d = 0;
};

Term parse_term(Cursor& c) {
  Term t;
  if (c.s.substr(c.pos, 5) == "sqrt(" ||
      ((c.peek() == '+' || c.peek() == '-') && c.s.substr(c.pos + 1, 5) == "sqrt(")) {
    int sgn = 1;
    if (c.eat('-'))
      sgn = -1;
    else
      c.eat('+');
    t.value = sgn;
    c.pos += 5;
    BigInt d = parse_int(c);
    if (!c.eat(')')) throw ParseError("missing ')' in '" + std::string(c.s) + "'");
    t.is_sqrt = true;
    t.d = static_cast<unsigned>(d);
    return t;
  }
  t.value = parse_rat(c);
  if (c.eat('*')) {
    if (c.s.substr(c.pos, 5) != "sqrt(") throw ParseError("expected sqrt( after '*' in '" + std::string(c.s) + "'");
    c.pos += 5;
    BigInt d = parse_int(c);
    if (!c.eat(')')) throw ParseError("missing ')' in '" + std::string(c.s) + "'");
    t.is_sqrt = true;
    t.d = static_cast<unsigned>(d);
  }
  return t;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  Cursor c{text};
  if (c.done()) throw ParseError("empty scalar");
  BigRat a = 0, b = 0;
  unsigned d = 0;
  for (int nterms = 0; !c.done(); ++nterms) {
    if (nterms > 1) throw ParseError("too many terms in scalar '" + std::string(text) + "'");
    if (nterms == 1 && c.peek() != '+' && c.peek() != '-')
      throw ParseError("expected '+' or '-' between terms in '" + std::string(text) + "'");
    Term t = parse_term(c);
    if (t.is_sqrt) {
      if (d != 0 && d != t.d) throw ParseError("mixed sqrt fields in '" + std::string(text) + "'");
      if (t.d == 0 || !is_squarefree(t.d))
        throw ParseError("sqrt argument must be squarefree positive in '" + std::string(text) + "'");
      d = t.d;
      b += t.value;
    } else {
      a += t.value;
    }
  }
  if (d == 0 || d == 1) return Scalar(a + b);
  return Scalar(a, b, d);
}

}  // namespace mink3
