#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "qsq/error.hpp"
#include "qsq/verification.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria, one line per criterion"};
  std::vector<int> ids;
  std::string sizes = "full";
  app.add_option("--criterion", ids, "criteria to run (default all)")->check(CLI::Range(1, qsq::criterion_count));
  app.add_option("--sizes", sizes, "full or quick")->check(CLI::IsMember({"full", "quick"}));
  CLI11_PARSE(app, argc, argv);
  if (ids.empty())
    for (int i = 1; i <= qsq::criterion_count; ++i) ids.push_back(i);

  const qsq::SuiteConfig config = sizes == "quick" ? qsq::SuiteConfig::quick() : qsq::SuiteConfig::full();
  bool all = true;
  for (int id : ids) {
    try {
      const qsq::CriterionResult r = qsq::run_criterion(id, config);
      const bool in_time = r.time_limit == 0 || r.seconds < r.time_limit;
      const bool pass = r.pass && in_time;
      all = all && pass;
      std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " " << r.title << ": " << r.summary;
      if (r.time_limit > 0) std::cout << "; " << r.seconds << " s of " << r.time_limit << " s";
      std::cout << std::endl;
    } catch (const qsq::Error& e) {
      all = false;
      std::cout << "criterion " << id << ": FAIL " << qsq::to_string(e.code()) << ": " << e.what() << std::endl;
    }
  }
  return all ? 0 : 1;
}
