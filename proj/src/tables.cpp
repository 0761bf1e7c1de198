#include "liemod/tables.hpp"

#include "liemod/cohomology.hpp"

#include <sstream>

namespace liemod {

const char* to_string(TableRow::Status s) {
  switch (s) {
  case TableRow::Status::Match: return "match";
  case TableRow::Status::Mismatch: return "mismatch";
  case TableRow::Status::NoExpectation: return "no-expectation";
  }
  return "?";
}

long alternating_sum(const BettiVector& b) {
  long s = 0;
  for (std::size_t k = 0; k < b.size(); ++k) s += (k % 2 ? -1 : 1) * static_cast<long>(b[k]);
  return s;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) { return seed * 0x9E3779B97F4A7C15ull + k; }

namespace {

void finish(TableRow& row, const RationalCochain& d) {
  row.euler_ok = alternating_sum(row.computed) == 0;
  row.center_ok = !row.computed.empty() && row.computed[0] == center(d);
  if (row.expected) {
    row.status = *row.expected == row.computed ? TableRow::Status::Match : TableRow::Status::Mismatch;
    row.expected_euler_ok = alternating_sum(*row.expected) == 0;
  }
}

TableRow family_row(const AlgebraDef& def, const SpecialPoint* sub, std::uint64_t seed) {
  TableRow row;
  row.id = def.id;
  row.point = sub ? sub->name : "generic";
  row.expected = sub ? sub->betti : def.expected_betti;
  auto at = [&](std::uint64_t k) {
    Assignment a = sub ? sample_generic(def, *sub, mix_seed(seed, k)) : sample_generic(def, mix_seed(seed, k));
    if (sub) {
      Assignment full = a;
      for (const auto& [name, v] : sub->values) full[name] = poly_eval(v, a);
      a = full;
    }
    return std::pair{a, def.at(a)};
  };
  auto [a1, d1] = at(1);
  auto [a2, d2] = at(2);
  BettiVector b1 = betti(d1).betti, b2 = betti(d2).betti;
  row.samples = {a1, a2};
  if (b1 != b2) {
    auto [a3, d3] = at(3);
    auto [a4, d4] = at(4);
    b1 = betti(d3).betti;
    b2 = betti(d4).betti;
    row.samples = {a3, a4};
    row.resampled = true;
    if (b1 != b2)
      throw Error(ErrorCode::NoValidSample, def.id + " " + row.point + ": sampled points keep disagreeing");
    d1 = d3;
  }
  row.computed = b1;
  finish(row, d1);
  return row;
}

TableRow fixed_row(const AlgebraDef& def, const SpecialPoint* pt) {
  TableRow row;
  row.id = def.id;
  row.point = pt ? pt->name : "-";
  row.expected = pt ? pt->betti : def.expected_betti;
  Assignment a;
  if (pt)
    for (const auto& [k, v] : pt->values) a[k] = v.to_rational();
  const RationalCochain d = def.at(a);
  row.samples = {a};
  row.computed = betti(d).betti;
  finish(row, d);
  return row;
}

} // namespace

std::vector<TableRow> table_rows(const AlgebraDef& def, std::uint64_t seed) {
  std::vector<TableRow> rows;
  rows.push_back(def.params.empty() ? fixed_row(def, nullptr) : family_row(def, nullptr, seed));
  for (const auto& pt : def.points) {
    if (def.free_params(pt).empty()) rows.push_back(fixed_row(def, &pt));
    else rows.push_back(family_row(def, &pt, seed));
  }
  return rows;
}

TableReport make_table(int dim, std::uint64_t seed) {
  TableReport rep;
  rep.dim = dim;
  rep.seed = seed;
  for (const auto& def : dim == 0 ? nilpotent_table() : catalog(dim))
    for (auto& row : table_rows(def, seed)) rep.rows.push_back(std::move(row));
  return rep;
}

std::size_t TableReport::count(TableRow::Status s) const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.status == s;
  return n;
}

bool TableReport::consistent() const {
  for (const auto& r : rows)
    if (r.failed()) return false;
  return true;
}

std::string TableReport::to_tsv() const {
  std::ostringstream os;
  os << "id\tpoint\tcomputed\texpected\tstatus\teuler_ok\tcenter_ok\texpected_euler_ok\n";
  auto yn = [](bool b) { return b ? "true" : "false"; };
  for (const auto& r : rows) {
    os << r.id << '\t' << r.point << '\t' << betti_to_string(r.computed) << '\t'
       << (r.expected ? betti_to_string(*r.expected) : "-") << '\t' << to_string(r.status) << '\t'
       << yn(r.euler_ok) << '\t' << yn(r.center_ok) << '\t'
       << (r.expected_euler_ok ? yn(*r.expected_euler_ok) : "-") << '\n';
  }
  return os.str();
}

} // namespace liemod
