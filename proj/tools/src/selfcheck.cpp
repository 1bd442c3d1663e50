#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "commands.hpp"
#include "linegraph/catalog.hpp"
#include "linegraph/isomorphism.hpp"
#include "linegraph/krausz.hpp"
#include "linegraph/recognition.hpp"
#include "linegraph/rootgraph.hpp"

namespace linegraph::cli {

namespace {

struct Check {
  Check(std::string name, std::function<bool()> run) : name(std::move(name)), run(std::move(run)) {}

  std::string name;
  std::function<bool()> run;
  bool passed = false;
  std::string error;
};

std::vector<Check> shipped_checks() {
  std::vector<Check> checks;
  const auto& exceptional = exceptional_graphs();
  for (std::size_t i = 0; i < exceptional.size(); ++i) {
    const auto& x = exceptional[i];
    const auto& partner = exceptional_partner(i);
    checks.emplace_back("table1 L(" + x.name + ") = " + partner.name, [&x, &partner] {
                        return is_isomorphic(line_graph(x.graph).graph, partner.graph).has_value();
                      });
  }
  for (const auto& s : singular_graphs()) {
    checks.emplace_back("singular " + s.name + " roundtrip", [&s] {
                        auto report = verify_roundtrip(s.graph);
                        return report.line_graph && report.roundtrip_isomorphic;
                      });
    checks.emplace_back("singular " + s.name + " has >= 2 decompositions",
                      [&s] { return enumerate_decompositions(s.graph).size() >= 2; });
  }
  for (const auto& b : beineke_graphs()) {
    checks.emplace_back("beineke " + std::to_string(b.index) + " rejected", [&b] {
                        auto verdict = is_line_graph_beineke(b.graph);
                        return !verdict.is_line_graph && !is_line_graph_krausz(b.graph).has_value() &&
                               verdict.witness && verdict.witness->beineke_index == b.index;
                      });
  }
  checks.emplace_back("beineke 1 witness is the identity", [] {
                      auto verdict = is_line_graph_beineke(beineke_graphs().front().graph);
                      return verdict.witness && verdict.witness->embedding == Embedding{0, 1, 2, 3};
                    });
  return checks;
}

}  // namespace

int cmd_selfcheck(const Options& opt, Printer& out) {
  std::vector<Check> checks = shipped_checks();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      try {
        checks[i].passed = checks[i].run();
      } catch (const std::exception& e) {
        checks[i].error = e.what();
      }
    }
  };
  const unsigned jobs = std::clamp<unsigned>(opt.jobs, 1, 64);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t passed = 0;
  for (const auto& c : checks) {
    passed += c.passed;
    out.text(std::string(c.passed ? "PASS " : "FAIL ") + c.name + (c.error.empty() ? "" : " (" + c.error + ")"));
    out.record({{"verb", "selfcheck"}, {"check", c.name}, {"passed", c.passed}});
  }
  const std::size_t failed = checks.size() - passed;
  out.text("selfcheck: " + std::to_string(passed) + " passed, " + std::to_string(failed) + " failed");
  out.record({{"verb", "selfcheck"}, {"passed", passed}, {"failed", failed}});
  return failed == 0 ? ok : negative;
}

}  // namespace linegraph::cli
