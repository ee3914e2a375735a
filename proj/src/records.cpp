#include "monolab/records.hpp"

#include <cstdio>
#include <ostream>

namespace monolab {

const std::string& csv_header() {
  static const std::string header =
      "family,g1,g2,g3,z_re,z_im,t,x,y,z,c12,c13,c23,e12,e13,e23,tau,c3,e_s,e_a,m1,m2,verdict1,verdict2";
  return header;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_row(const MeasureRecord& rec) {
  std::string row(to_string(rec.family));
  const auto put = [&row](double v) {
    row += ',';
    row += format_number(v);
  };
  const auto skip = [&row](int k) { row.append(static_cast<std::size_t>(k), ','); };

  if (const auto* g = std::get_if<GhzParams>(&rec.params)) {
    for (double v : g->g) put(v);
    put(g->z.real());
    put(g->z.imag());
    skip(4);
  } else {
    const auto& w = std::get<WParams>(rec.params);
    skip(5);
    for (double v : {w.t, w.x, w.y, w.z}) put(v);
  }
  for (double v : {rec.c.c12, rec.c.c13, rec.c.c23, rec.e12, rec.e13, rec.e23, rec.tau, rec.c3, rec.e_s, rec.e_a,
                   rec.m1, rec.m2})
    put(v);
  row += ',';
  row += to_string(rec.verdict1());
  row += ',';
  row += to_string(rec.verdict2());
  return row;
}

void write_csv(std::ostream& out, std::span<const MeasureRecord> records) {
  out << csv_header() << '\n';
  for (const auto& r : records) out << csv_row(r) << '\n';
}

void write_csv(std::ostream& out, const ScanResult& scan) {
  out << csv_header() << '\n';
  for (const auto& cell : scan.cells) out << csv_row(cell.record) << '\n';
}

nlohmann::json to_json(const ParamRecord& p) {
  if (const auto* g = std::get_if<GhzParams>(&p))
    return {{"kind", "ghz"}, {"g", g->g}, {"z_re", g->z.real()}, {"z_im", g->z.imag()}};
  const auto& w = std::get<WParams>(p);
  return {{"kind", "w"}, {"t", w.t}, {"x", w.x}, {"y", w.y}, {"z", w.z}};
}

nlohmann::json to_json(const MeasureRecord& rec) {
  return {{"family", std::string(to_string(rec.family))},
          {"params", to_json(rec.params)},
          {"c12", rec.c.c12},
          {"c13", rec.c.c13},
          {"c23", rec.c.c23},
          {"e12", rec.e12},
          {"e13", rec.e13},
          {"e23", rec.e23},
          {"tau", rec.tau},
          {"c3", rec.c3},
          {"e_s", rec.e_s},
          {"e_a", rec.e_a},
          {"m1", rec.m1},
          {"m2", rec.m2},
          {"verdict1", std::string(to_string(rec.verdict1()))},
          {"verdict2", std::string(to_string(rec.verdict2()))}};
}

nlohmann::json to_json(const BatchSummary& s) {
  return {{"n", s.n},
          {"min_m1", s.min_m1},
          {"max_m1", s.max_m1},
          {"min_m2", s.min_m2},
          {"max_m2", s.max_m2},
          {"fraction_m1_violated", s.fraction_m1_violated},
          {"fraction_m2_violated", s.fraction_m2_violated}};
}

}  // namespace monolab
