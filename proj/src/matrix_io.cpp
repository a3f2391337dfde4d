#include "hornsp/matrix_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace hornsp {

namespace {

[[noreturn]] void bad_token(std::string_view token) {
  throw DomainError("malformed matrix entry '" + std::string(token) + "'");
}

// Reads a real number at the front of `s`; returns characters consumed (0 on failure).
std::size_t read_real(const std::string& s, std::size_t pos, double& out) {
  const char* begin = s.c_str() + pos;
  char* end = nullptr;
  errno = 0;
  out = std::strtod(begin, &end);
  if (end == begin || errno == ERANGE) return 0;
  return static_cast<std::size_t>(end - begin);
}

}  // namespace

Complex parse_entry(std::string_view token) {
  const std::string s(token);
  if (s.empty()) bad_token(token);
  if (s.back() != 'i') {
    double re = 0.0;
    if (read_real(s, 0, re) != s.size()) bad_token(token);
    return {re, 0.0};
  }
  // Imaginary unit alone, with an optional sign.
  if (s == "i" || s == "+i") return {0.0, 1.0};
  if (s == "-i") return {0.0, -1.0};

  double first = 0.0;
  const std::size_t used = read_real(s, 0, first);
  if (used == 0) bad_token(token);
  if (used == s.size() - 1) return {0.0, first};  // "bi"

  const std::string rest = s.substr(used, s.size() - 1 - used);
  if (rest == "+") return {first, 1.0};
  if (rest == "-") return {first, -1.0};
  if (rest.front() != '+' && rest.front() != '-') bad_token(token);
  double im = 0.0;
  if (read_real(rest, 0, im) != rest.size()) bad_token(token);
  return {first, im};
}

ComplexMatrix parse_complex_matrix(std::istream& in) {
  std::string line;
  long long dim = 0;
  if (!(in >> dim) || dim < 1) throw DomainError("matrix text: expected a positive dimension");
  ComplexMatrix m(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      std::string token;
      if (!(in >> token)) throw DomainError("matrix text: too few entries");
      m(i, j) = parse_entry(token);
    }
  }
  std::string extra;
  if (in >> extra) throw DomainError("matrix text: trailing content '" + extra + "'");
  return m;
}

RealMatrix parse_real_matrix(std::istream& in) {
  const ComplexMatrix c = parse_complex_matrix(in);
  if (c.imag().cwiseAbs().maxCoeff() != 0.0) {
    throw DomainError("matrix text: expected real entries");
  }
  return c.real();
}

std::string format_entry(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value + 0.0);  // no "-0"
  return buf;
}

std::string format_entry(Complex value) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", value.real() + 0.0, value.imag() + 0.0);
  return buf;
}

namespace {

template <typename Scalar>
std::string format_any(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw DomainError("matrix text: matrix must be square");
  std::ostringstream out;
  out << m.rows() << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << format_entry(m(i, j));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string format_matrix(const RealMatrix& m) { return format_any(m); }
std::string format_matrix(const ComplexMatrix& m) { return format_any(m); }

}  // namespace hornsp
