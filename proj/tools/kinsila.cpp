#include "kinsila/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace {

using namespace kinsila;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  try {
    cli::write_file(out_path, text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int classify(const std::string& path, bool json, const std::string& out_path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: " << path << ": cannot read file\n";
    return cli::ParseError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  cli::InputDocument doc;
  try {
    doc = cli::parse_input(buf.str());
  } catch (const cli::InputError& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return cli::ParseError;
  }
  const cli::Outcome o = cli::run_document(doc);
  const bool color = out_path.empty() && cli::color_allowed() && isatty(STDOUT_FILENO);
  if (emit(json ? cli::dump(o.report) : cli::render_text(o.report, color), out_path) != 0) return cli::ParseError;
  return o.exit_code;
}

int batch(const std::vector<std::string>& family_names, const std::vector<std::size_t>& dims,
          const std::string& out_dir, unsigned jobs) {
  std::vector<catalog::Family> families;
  for (const auto& name : family_names) {
    auto f = catalog::parse_family(name);
    if (!f) {
      std::cerr << "error: unknown family \"" << name << "\"\n";
      return cli::ParseError;
    }
    families.push_back(*f);
  }
  if (families.empty()) families.assign(catalog::all_families.begin(), catalog::all_families.end());
  for (std::size_t d : dims)
    if (d == 0) {
      std::cerr << "error: dimensions start at 1\n";
      return cli::ParseError;
    }
  const cli::BatchResult b = cli::run_batch(families, dims, jobs);
  if (!out_dir.empty()) cli::write_batch(b, out_dir);
  std::cout << cli::summary_text(b);
  return b.exit_code();
}

int export_entry(const std::string& family, std::size_t dim, const std::string& out_path) {
  auto f = catalog::parse_family(family);
  if (!f || dim == 0) {
    std::cerr << "error: unknown family \"" << family << "\" or zero dimension\n";
    return cli::ParseError;
  }
  return emit(cli::dump(cli::to_json(cli::export_document(catalog::make_algebra(*f, dim)))), out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact validation and classification of generalised kinematical Lie algebras"};
  app.require_subcommand(1);

  std::string path, out_path;
  bool json = false;
  auto* cls = app.add_subcommand("classify", "validate and classify a Lie algebra description file");
  cls->add_option("file", path, "input document (JSON)")->required();
  cls->add_flag("--json", json, "write the report as JSON instead of text");
  cls->add_option("--out", out_path, "write the report to this file");

  std::vector<std::string> families;
  std::vector<std::size_t> dims{4};
  std::string out_dir;
  unsigned jobs = 1;
  auto* bat = app.add_subcommand("batch", "classify catalog families over a list of dimensions");
  bat->add_option("--families", families, "comma-separated family names (default: all)")->delimiter(',');
  bat->add_option("--dims", dims, "comma-separated space dimensions (default: 4)")->delimiter(',');
  bat->add_option("--out-dir", out_dir, "directory for per-entry reports and summary.csv / summary.txt");
  bat->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string family;
  std::size_t dim = 0;
  auto* cat = app.add_subcommand("catalog", "catalog utilities");
  cat->require_subcommand(1);
  auto* exp = cat->add_subcommand("export", "print a catalog entry as an input document");
  exp->add_option("--family", family, "family name")->required();
  exp->add_option("--dim", dim, "space dimension D")->required();
  exp->add_option("--out", out_path, "write to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : cli::ParseError;
  }
  if (cls->parsed()) return classify(path, json, out_path);
  if (bat->parsed()) return batch(families, dims, out_dir, jobs);
  return export_entry(family, dim, out_path);
}
