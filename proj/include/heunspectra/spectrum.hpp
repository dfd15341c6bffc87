#pragma once

#include <string>
#include <vector>

namespace heunspectra {

enum class Parity { even, odd, none };

std::string to_string(Parity p);

struct SpectrumReport {
  std::vector<double> eigenvalues;
  std::vector<Parity> parity;
  // cluster_id[i] indexes into clusters; singletons are clusters of size 1.
  std::vector<int> cluster_id;
  std::vector<std::vector<int>> clusters;
  int truncation_dim = 0;
  double degen_tol = 0;

  // Clusters with at least min_size members whose lowest value is below cap.
  std::vector<std::vector<int>> degenerate_clusters(std::size_t min_size = 2, double cap = 1e300) const;
};

// Groups ascending values whose consecutive gaps are <= tol.
void assign_clusters(SpectrumReport& report, double tol);

// Merges labelled blocks into one ascending report truncated to `count`.
SpectrumReport merge_blocks(const std::vector<std::pair<std::vector<double>, Parity>>& blocks, int count,
                            double degen_tol, int truncation_dim);

}  // namespace heunspectra
