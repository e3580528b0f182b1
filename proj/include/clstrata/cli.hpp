#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clstrata::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage/input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitUsage = 2;

int cmd_analyze(const std::string& graph_path, bool json, std::ostream& out,
                std::ostream& err);
int cmd_enumerate(const std::string& strips_path, bool census, bool json,
                  std::ostream& out, std::ostream& err);
int cmd_classify(const std::string& graph_path, const std::string& generators,
                 const std::string& catalog_name, std::ostream& out, std::ostream& err);
int cmd_realizable(const std::string& graph_path, bool criteria_only,
                   const std::string& known_bad_path, const std::string& record_bad_path,
                   bool json, std::ostream& out, std::ostream& err);
int cmd_catalog(const std::string& out_dir, const std::string& name, std::ostream& out,
                std::ostream& err);
int cmd_verify_paper(unsigned long long seed, std::ostream& out, std::ostream& err);
int cmd_export(const std::string& ribbon_path, const std::string& format,
               std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

} // namespace clstrata::cli
