#include "heunspectra/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "heunspectra/errors.hpp"

namespace heunspectra {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k) row += ',';
    row += fields[k];
  }
  return row + '\n';
}

std::string spectrum_csv(const SpectrumReport& r) {
  std::ostringstream s;
  s << "index,value,parity,cluster_id\n";
  for (std::size_t k = 0; k < r.eigenvalues.size(); ++k)
    s << csv_row({std::to_string(k), format_number(r.eigenvalues[k]), to_string(r.parity[k]),
                  std::to_string(r.cluster_id[k])});
  return s.str();
}

std::string spectrum_jsonl(const SpectrumReport& r, const std::string& metadata_json) {
  std::ostringstream s;
  s << metadata_json << '\n';
  for (std::size_t k = 0; k < r.eigenvalues.size(); ++k)
    s << "{\"index\":" << k << ",\"value\":" << format_number(r.eigenvalues[k]) << ",\"parity\":\""
      << to_string(r.parity[k]) << "\",\"cluster_id\":" << r.cluster_id[k] << "}\n";
  return s.str();
}

}  // namespace heunspectra
