#ifndef BCREP_CLI_HPP
#define BCREP_CLI_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace bcrep {

enum ExitCode : int { exit_ok = 0, exit_semantic = 1, exit_input = 2 };

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::string out;  // empty: no output file
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::size_t dim_max = 3;
    std::size_t degree = 1;
    bool degree_given = false;
    std::vector<std::string> extra_reps;  // verify-theorem --rep
};

int cmd_validate(const RunConfig& cfg, std::ostream& out);
int cmd_normalize(const RunConfig& cfg, std::ostream& out);
int cmd_cohomology(const RunConfig& cfg, std::ostream& out);
int cmd_strictify(const RunConfig& cfg, std::ostream& out);
int cmd_classify(const RunConfig& cfg, std::ostream& out);
int cmd_verify_theorem(const RunConfig& cfg, std::ostream& out);

/// Parses args (without the program name), dispatches, and maps errors to exit codes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcrep

#endif
