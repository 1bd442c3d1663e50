#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "linegraph/graph.hpp"
#include "linegraph/limits.hpp"

namespace linegraph::cli {

enum ExitCode { ok = 0, negative = 1, usage = 2, refused = 3 };

struct Options {
  bool json = false;
  bool dot = false;
  std::optional<std::size_t> cap;
  std::string via = "decomposition";
  std::string format;  // "g6", "edges" or empty for auto-detect
  unsigned jobs = 1;

  Limits limits() const;
};

// Human text or one JSON object per line.
class Printer {
 public:
  Printer(std::ostream& out, bool json) : out_(out), json_(json) {}

  bool is_json() const noexcept { return json_; }
  void text(const std::string& line);
  void record(const nlohmann::json& object);

 private:
  std::ostream& out_;
  bool json_;
};

Graph load_graph(const std::string& path, const std::string& format);
std::string read_file(const std::string& path);

int cmd_recognize(const std::string& path, const Options& opt, Printer& out);
int cmd_witness(const std::string& path, const Options& opt, Printer& out);
int cmd_decompose(const std::string& path, const Options& opt, Printer& out);
int cmd_enumerate(const std::string& path, const Options& opt, Printer& out);
int cmd_canonical(const std::string& path, const Options& opt, Printer& out);
int cmd_validate_relation(const std::string& graph_path, const std::string& relation_path, const Options& opt,
                          Printer& out);
int cmd_root(const std::string& path, const Options& opt, Printer& out);
int cmd_linegraph(const std::string& path, const Options& opt, Printer& out);
int cmd_whitney(const std::string& g_path, const std::string& h_path, const std::string& phi_path,
                const Options& opt, Printer& out);
int cmd_k0_demo(std::size_t k, std::size_t m, const Options& opt, Printer& out);
int cmd_catalog_dump(const std::vector<std::string>& names, const Options& opt, Printer& out);
int cmd_selfcheck(const Options& opt, Printer& out);

}  // namespace linegraph::cli
