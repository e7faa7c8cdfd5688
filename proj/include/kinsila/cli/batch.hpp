#pragma once

#include "kinsila/cli/report.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

namespace kinsila::cli {

struct BatchRow {
  catalog::Family family;
  std::size_t dim = 0;
  int exit_code = Classified;
  std::string outcome;   // label, failure code or FAULT
  std::string expected;  // empty when the catalog has no expectation
  Json report;

  bool matches() const { return expected.empty() || outcome == expected; }
};

struct BatchResult {
  std::vector<BatchRow> rows;

  int exit_code() const {
    bool mismatch = false;
    for (const auto& r : rows) {
      if (r.exit_code == Fault) return Fault;
      mismatch = mismatch || !r.matches();
    }
    return mismatch ? ValidationFailure : Classified;
  }
};

inline std::string report_file_name(catalog::Family f, std::size_t d) {
  return std::string(catalog::to_string(f)) + "-" + std::to_string(d) + ".json";
}

inline BatchRow batch_entry(catalog::Family f, std::size_t d) {
  catalog::Algebra a = catalog::make_algebra(f, d);
  const std::string name = std::string(catalog::to_string(f)) + "-" + std::to_string(d);
  auto algebra = std::make_shared<const LieAlgebra>(std::move(a.algebra));
  Outcome o = run_pipeline(name, std::move(algebra), a.roles);
  BatchRow row{f, d, o.exit_code, "", "", std::move(o.report)};
  if (row.exit_code == Fault) row.outcome = "FAULT";
  else if (row.exit_code == ValidationFailure) row.outcome = row.report["validation"]["failure"].get<std::string>();
  else row.outcome = row.report["label"].get<std::string>();
  if (auto l = catalog::expected_label(f, d)) row.expected = kin::to_string(*l);
  else if (auto e = catalog::expected_failure(f, d)) row.expected = kin::to_string(*e);
  return row;
}

/// Every (family, dim) pair, dims outermost. Entries are independent, so
/// `jobs` workers share them; rows come back in input order regardless.
inline BatchResult run_batch(const std::vector<catalog::Family>& families, const std::vector<std::size_t>& dims,
                             unsigned jobs = 1) {
  std::vector<std::pair<catalog::Family, std::size_t>> work;
  for (std::size_t d : dims)
    for (catalog::Family f : families) work.emplace_back(f, d);
  BatchResult out;
  out.rows.resize(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) out.rows[i] = batch_entry(work[i].first, work[i].second);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(work.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

inline std::string summary_csv(const BatchResult& b) {
  std::string out = "family,dim,exit_code,outcome,expected,matches\n";
  for (const auto& r : b.rows)
    out += std::string(catalog::to_string(r.family)) + "," + std::to_string(r.dim) + "," +
           std::to_string(r.exit_code) + "," + r.outcome + "," + r.expected + "," + (r.matches() ? "yes" : "no") + "\n";
  return out;
}

inline std::string summary_text(const BatchResult& b) {
  std::size_t width = 6;
  for (const auto& r : b.rows) width = std::max(width, catalog::to_string(r.family).size());
  std::string out;
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  out += pad("family", width) + "  " + pad("D", 3) + "  " + pad("outcome", 26) + "  expected\n";
  for (const auto& r : b.rows)
    out += pad(std::string(catalog::to_string(r.family)), width) + "  " + pad(std::to_string(r.dim), 3) + "  " +
           pad(r.outcome, 26) + "  " + (r.expected.empty() ? "-" : r.expected) + (r.matches() ? "" : "  MISMATCH") +
           "\n";
  std::size_t mismatches = 0;
  for (const auto& r : b.rows) mismatches += !r.matches();
  out += std::to_string(b.rows.size()) + " entries, " + std::to_string(mismatches) + " mismatches\n";
  return out;
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << text;
}

/// One report per entry plus summary.csv and summary.txt.
inline void write_batch(const BatchResult& b, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& r : b.rows) write_file(dir / report_file_name(r.family, r.dim), dump(r.report));
  write_file(dir / "summary.csv", summary_csv(b));
  write_file(dir / "summary.txt", summary_text(b));
}

}  // namespace kinsila::cli
