#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmod/dmodcore.hpp"

namespace dmod::cli {

enum ExitStatus { kOk = 0, kUsage = 1, kComputation = 2 };

struct Session {
  std::vector<std::string> ring;     // input ring variable names
  std::vector<std::string> polys;    // raw polynomial text
  std::string ord = "dp";            // dp | lp | wp:<weights> | elim:<vars>
  std::string algebra;               // commutative | weyl | weyl_s; empty = command default
  std::optional<std::string> alpha;
  std::vector<std::int64_t> weights;
  std::optional<std::string> sigma;
  std::string method = "modulo";     // operator: modulo | search | lift
  int k = 1;
  std::optional<int> cap;
  std::optional<double> timeout;     // seconds
  bool json = false;
  bool stretch = false;
  std::string filter;                // verify: only cases whose name contains this
  bool slim = false;
};

// Comma or whitespace separated identifiers without duplicates. Names
// reserved for the derived algebras are rejected later, by the commands that
// take f as input.
std::vector<std::string> parse_ring_spec(std::string_view text);
// Reads "ring: x,y,z" and one polynomial per line; '#' starts a comment.
void load_ideal_file(const std::string& path, Session& s);

const std::vector<std::string>& command_names();
int run_command(const std::string& command, const Session& s, std::ostream& out, std::ostream& err);
// Full argv front end (CLI11); returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// ---- the built-in regression corpus

struct CaseResult {
  enum Status { Pass, Fail, Skip } status;
  std::string detail;
};

struct CorpusCase {
  std::string name;
  int criterion;   // acceptance criterion it belongs to, 0 if none
  bool stretch;
  std::function<CaseResult(const DmodOptions&)> run;
};

const std::vector<CorpusCase>& corpus();
// Runs one case, mapping CapExceeded to Skip and other errors to Fail.
CaseResult run_case(const CorpusCase& c, const DmodOptions& opt);

}  // namespace dmod::cli
