#include "heunspectra/spectrum.hpp"

#include <algorithm>
#include <numeric>

#include "heunspectra/errors.hpp"

namespace heunspectra {

std::string to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    default: return "none";
  }
}

void assign_clusters(SpectrumReport& report, double tol) {
  report.degen_tol = tol;
  report.clusters.clear();
  report.cluster_id.assign(report.eigenvalues.size(), -1);
  for (std::size_t i = 0; i < report.eigenvalues.size(); ++i) {
    if (i == 0 || report.eigenvalues[i] - report.eigenvalues[i - 1] > tol) report.clusters.emplace_back();
    report.clusters.back().push_back(static_cast<int>(i));
    report.cluster_id[i] = static_cast<int>(report.clusters.size() - 1);
  }
}

std::vector<std::vector<int>> SpectrumReport::degenerate_clusters(std::size_t min_size, double cap) const {
  std::vector<std::vector<int>> out;
  for (const auto& c : clusters)
    if (c.size() >= min_size && eigenvalues[c.front()] < cap) out.push_back(c);
  return out;
}

SpectrumReport merge_blocks(const std::vector<std::pair<std::vector<double>, Parity>>& blocks, int count,
                            double degen_tol, int truncation_dim) {
  std::vector<std::pair<double, Parity>> all;
  for (const auto& [values, parity] : blocks)
    for (double v : values) all.emplace_back(v, parity);
  if (count < 0 || static_cast<std::size_t>(count) > all.size()) throw IndexOutOfRange("count exceeds dimension");
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SpectrumReport r;
  r.truncation_dim = truncation_dim;
  for (int i = 0; i < count; ++i) {
    r.eigenvalues.push_back(all[i].first);
    r.parity.push_back(all[i].second);
  }
  assign_clusters(r, degen_tol);
  return r;
}

}  // namespace heunspectra
