#include "liemod/cochain.hpp"

#include <algorithm>

namespace liemod {

template class Cochain<Rational>;
template class Cochain<Scalar>;

std::vector<int> BasisTerm::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (inputs >> i & 1u) out.push_back(i + 1);
  return out;
}

BasisTerm BasisTerm::make(const std::vector<int>& in, int output) {
  BasisTerm b;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] < 1 || in[i] > 32 || (i > 0 && in[i] <= in[i - 1]))
      throw Error(ErrorCode::InvalidArgument, "input indices must be strictly increasing and >= 1");
    b.inputs |= 1u << (in[i] - 1);
  }
  if (output < 1) throw Error(ErrorCode::InvalidArgument, "output index must be >= 1");
  b.output = output - 1;
  return b;
}

std::string BasisTerm::to_string() const {
  std::string s = "psi";
  const auto idx = indices();
  const bool wide = !idx.empty() && idx.back() > 9;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (wide && i > 0) s += ',';
    s += std::to_string(idx[i]);
  }
  return s + "->" + std::to_string(output + 1);
}

bool operator<(const BasisTerm& a, const BasisTerm& b) {
  if (a.inputs != b.inputs) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    const std::uint32_t x = a.inputs ^ b.inputs;
    return (a.inputs & x & (~x + 1)) != 0;
  }
  return a.output < b.output;
}

std::vector<BasisTerm> cochain_basis(int n, int k) {
  std::vector<BasisTerm> out;
  if (k < 0 || k > n) return out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) != k) continue;
    for (int o = 0; o < n; ++o) out.push_back({s, o});
  }
  std::sort(out.begin(), out.end());
  return out;
}

RationalCochain evaluate(const ScalarCochain& phi, const Assignment& at) {
  return phi.map<Rational>([&](const Scalar& c) { return poly_eval(c, at); });
}

ScalarCochain to_scalar(const RationalCochain& phi) {
  return phi.map<Scalar>([](const Rational& c) { return Scalar(c); });
}

namespace {

template <class T, class F>
std::string render(const Cochain<T>& phi, F coeff_text) {
  if (phi.is_zero()) return "0";
  std::string out;
  for (const auto& [b, c] : phi.terms()) {
    std::string t = coeff_text(c);
    bool neg = false;
    if (!t.empty() && t[0] == '-' && t.find_first_of("+-", 1) == std::string::npos) {
      neg = true;
      t.erase(0, 1);
    }
    if (t.find_first_of("+-") != std::string::npos) t = "(" + t + ")";
    std::string term = t == "1" ? b.to_string() : t + "*" + b.to_string();
    if (out.empty()) out = (neg ? "-" : "") + term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out;
}

} // namespace

std::string to_string(const RationalCochain& phi) {
  return render(phi, [](const Rational& c) { return c.str(); });
}

std::string to_string(const ScalarCochain& phi) {
  return render(phi, [](const Scalar& c) { return c.to_string(); });
}

} // namespace liemod
