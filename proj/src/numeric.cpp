#include "salemlat/numeric.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cctype>

namespace salemlat {

std::pair<Rational, Rational> sqrt_bounds(const Rational& r, unsigned bits) {
  if (r.sign() < 0) throw PreconditionError("sqrt of a negative rational");
  // sqrt(n/d) = sqrt(n d) / d; scale by 2^bits so the integer root resolves
  // the requested gap.
  const Integer scale = Integer(1) << bits;
  const Integer n = numerator(r), d = denominator(r);
  const Integer radicand = n * d * scale * scale;
  Integer root = isqrt(radicand);
  Rational lo(root, d * scale);
  Rational hi = (root * root == radicand) ? lo : Rational(root + 1, d * scale);
  return {lo, hi};
}

Integer parse_integer(const std::string& text) {
  std::size_t start = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    start = 1;
  }
  if (start == text.size()) throw PreconditionError("malformed integer literal '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw PreconditionError("malformed integer literal '" + text + "'");
    }
  }
  // Leading zeros would select octal in the GMP parser.
  std::size_t first = std::min(text.find_first_not_of('0', start), text.size() - 1);
  Integer value(text.substr(first));
  return negative ? Integer(-value) : value;
}

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.empty()) throw PreconditionError("empty rational literal");
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      Integer num = parse_integer(text.substr(0, slash)), den = parse_integer(text.substr(slash + 1));
      if (den == 0) throw PreconditionError("zero denominator in '" + raw + "'");
      return Rational(num, den);
    }
    bool decimal = text.find_first_of(".eE") != std::string::npos;
    if (!decimal) return Rational(parse_integer(text));

    // Exact decimal: mantissa digits and a base-10 exponent.
    std::string mantissa = text;
    long long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
      mantissa = text.substr(0, e);
      exponent = std::stoll(text.substr(e + 1));
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
      negative = mantissa[0] == '-';
      mantissa.erase(0, 1);
    }
    std::string digits;
    for (char c : mantissa) {
      if (c == '.') {
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw PreconditionError("malformed rational literal '" + raw + "'");
      }
      digits.push_back(c);
    }
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
      exponent -= static_cast<long long>(mantissa.size() - dot - 1);
    }
    if (digits.empty()) throw PreconditionError("malformed rational literal '" + raw + "'");
    Rational value{parse_integer(digits)};
    Integer ten_power = bmp::pow(Integer(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    value = exponent < 0 ? value / Rational(ten_power) : value * Rational(ten_power);
    return negative ? Rational(-value) : value;
  } catch (const PreconditionError&) {
    throw;
  } catch (const std::exception&) {
    throw PreconditionError("malformed rational literal '" + raw + "'");
  }
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

double to_double(const Rational& x) {
  using Float = bmp::cpp_bin_float_50;
  Float value = Float(numerator(x)) / Float(denominator(x));
  return static_cast<double>(value);
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) throw Error("matrix entry is not integral");
      out(i, j) = numerator(m(i, j));
    }
  }
  return out;
}

bool is_integral(const RatMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) return false;
    }
  }
  return true;
}

IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.front().size());
  IntMatrix m(r, c);
  for (Index i = 0; i < r; ++i) {
    if (static_cast<Index>(rows[i].size()) != c) throw PreconditionError("ragged matrix literal");
    for (Index j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector int_vector(const std::vector<long long>& entries) {
  IntVector v(static_cast<Index>(entries.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = entries[i];
  return v;
}

}  // namespace salemlat
