#pragma once

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "tss/bounds.hpp"
#include "tss/edge_list.hpp"
#include "tss/tss_solver.hpp"

namespace tss {

inline const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return "case1";
    case CaseTag::Case2: return "case2";
    case CaseTag::Case3: return "case3";
  }
  return "?";
}

inline std::string format_decimal(double x, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

/// Flat "key=value" report. Vertex ids are external when a map is given.
inline void write_report(std::ostream& out, const SolverReport& r, const IdMap* ids = nullptr,
                         bool with_order = false) {
  auto ext = [&](Vertex v) -> std::int64_t { return ids ? ids->external(v) : static_cast<std::int64_t>(v); };
  out << "size=" << r.size() << '\n';
  out << "case_counts=" << r.case_counts[0] << ',' << r.case_counts[1] << ',' << r.case_counts[2] << '\n';
  out << "elapsed_ms=" << format_decimal(r.elapsed_ms(), 3) << '\n';
  out << "target_set=";
  for (std::size_t i = 0; i < r.target_set.size(); ++i) out << (i ? " " : "") << ext(r.target_set[i]);
  out << '\n';
  if (with_order) {
    out << "elimination_order=";
    for (std::size_t i = 0; i < r.elimination_order.size(); ++i) {
      const auto& e = r.elimination_order[i];
      out << (i ? " " : "") << ext(e.vertex) << ':' << static_cast<int>(e.tag);
    }
    out << '\n';
  }
}

inline void write_bound_csv_header(std::ostream& out) { out << "bound_new,bound_old,tss_size,applicable\n"; }

inline void write_bound_csv_row(std::ostream& out, const BoundReport& b) {
  out << format_decimal(b.bound_new.decimal) << ',' << format_decimal(b.bound_old.decimal) << ',' << b.tss_size << ','
      << (b.applicable ? "true" : "false") << '\n';
}

}  // namespace tss
