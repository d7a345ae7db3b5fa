#include <ostream>

#include "CLI11.hpp"
#include "dmod/cli.hpp"
#include "dmod/errors.hpp"

namespace dmod::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"D-module computations over Q"};
  app.require_subcommand(1);
  Session s;
  std::string ring, ideal, format = "text", engine = "normal";

  for (const auto& name : command_names()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--ring", ring, "input ring variables, e.g. x,y");
    sub->add_option("--poly", s.polys, "polynomial (repeatable)");
    sub->add_option("--ideal", ideal, "file with 'ring: ..' and one polynomial per line");
    sub->add_option("--ord", s.ord, "dp | lp | wp:<weights> | elim:<vars>");
    sub->add_option("--algebra", s.algebra, "commutative | weyl | weyl_s (ideal commands)");
    sub->add_option("--alpha", s.alpha, "rational exponent or root");
    sub->add_option("--weights", s.weights, "weight vector")->delimiter(',');
    sub->add_option("--sigma", s.sigma, "element for principal-intersect");
    sub->add_option("--method", s.method, "operator method: modulo | search | lift");
    sub->add_option("--k", s.k, "order bound for ann-k");
    sub->add_option("--cap", s.cap, "degree cap for intersection and operator search");
    sub->add_option("--timeout", s.timeout, "time budget in seconds");
    sub->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--engine", engine, "normal | slim")->check(CLI::IsMember({"normal", "slim"}));
    sub->add_flag("--stretch", s.stretch, "include stretch corpus cases");
    sub->add_option("--filter", s.filter, "verify: run cases whose name contains this text");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  s.json = format == "json";
  s.slim = engine == "slim";
  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (!ring.empty()) s.ring = parse_ring_spec(ring);
    if (!ideal.empty()) load_ideal_file(ideal, s);
  } catch (const Error& e) {
    err << "error [" << e.reason() << "]: " << e.what() << "\n";
    return kUsage;
  }
  return run_command(command, s, out, err);
}

}  // namespace dmod::cli
