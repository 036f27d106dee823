#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "posets/enumerate.hpp"
#include "posets/gp.hpp"
#include "posets/interval.hpp"
#include "posets/io.hpp"
#include "posets/laws.hpp"

namespace {

using namespace posets;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInputError = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Iposet load(const std::string& path) {
  return document_to_iposet(document_from_json(slurp(path)));
}

std::string embedding_points(const Embedding& e) {
  std::string out;
  for (std::size_t i = 0; i < e.map.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e.map[i]);
  }
  return out;
}

int run_check(const std::string& path, const std::string& property) {
  Iposet ip = load(path);
  const Poset& p = ip.poset;
  if (property == "sp") {
    if (auto n = find_induced(p, patterns().N)) {
      std::cout << "sp: no, induced N at " << embedding_points(*n) << "\n";
      return kExitFails;
    }
    auto term = sp_decompose(p);
    std::cout << "sp: yes, term " << sp_to_string(*term) << "\n";
    return kExitHolds;
  }
  if (property == "interval") {
    if (auto w = find_induced(p, patterns().TWO_TWO)) {
      std::cout << "interval: no, induced 2+2 at " << embedding_points(*w) << "\n";
      return kExitFails;
    }
    std::cout << "interval: yes, trace " << trace_to_string(canonical_trace(p)) << "\n";
    return kExitHolds;
  }
  if (property == "gp") {
    if (auto term = gp_decompose(ip)) {
      std::cout << "gp: yes, term " << term_to_string(*term) << "\n";
      return kExitHolds;
    }
    std::cout << "gp: no";
    if (auto f = forbidden_filter(p))
      std::cout << ", contains forbidden " << forbidden_pattern_name(*f);
    std::cout << "\n";
    return kExitFails;
  }
  if (property == "forbidden") {
    if (auto f = forbidden_filter(p)) {
      const auto& ps = patterns();
      const Poset* pat = nullptr;
      switch (*f) {
        case ForbiddenPattern::NN: pat = &ps.NN; break;
        case ForbiddenPattern::NPLUS: pat = &ps.NPLUS; break;
        case ForbiddenPattern::NMINUS: pat = &ps.NMINUS; break;
        case ForbiddenPattern::TC: pat = &ps.TC; break;
        case ForbiddenPattern::LN: pat = &ps.LN; break;
      }
      auto e = find_induced(p, *pat);
      std::cout << "forbidden: " << forbidden_pattern_name(*f) << " at "
                << embedding_points(*e) << "\n";
      return kExitFails;
    }
    std::cout << "forbidden: none\n";
    return kExitHolds;
  }
  throw ParseError("unknown property: " + property);
}

void print_table(const std::vector<CountsRow>& rows, std::ostream& out) {
  auto cell = [](const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string("n.a.");
  };
  const char* headers[] = {"n", "P", "SP", "GP", "GPC", "SIP", "IP", "GPI"};
  std::vector<std::vector<std::string>> grid;
  grid.emplace_back(std::begin(headers), std::end(headers));
  for (const auto& r : rows)
    grid.push_back({std::to_string(r.n), cell(r.p), cell(r.sp), cell(r.gp), cell(r.gpc),
                    cell(r.sip), cell(r.ip), cell(r.gpi)});
  std::vector<std::size_t> width(8, 0);
  for (const auto& row : grid)
    for (int c = 0; c < 8; ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : grid) {
    for (int c = 0; c < 8; ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << "\n";
  }
}

int run() {
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite posets and posets with interfaces"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads (outputs are unaffected)");

  std::string file, file_b, property = "gp", op = "glue", kind = "poset", format = "json";
  int points = 0, max_n = 4, level = -1;
  std::string side = "C";
  bool stretch = false, terms = false, connected = false;

  auto* c_check = app.add_subcommand("check", "decide a property; exit 1 when it fails");
  c_check->add_option("file", file)->required();
  c_check->add_option("--property", property)
      ->check(CLI::IsMember({"sp", "interval", "gp", "forbidden"}));

  auto* c_compose = app.add_subcommand("compose", "compose two documents");
  c_compose->add_option("--op", op)->check(CLI::IsMember({"glue", "par"}));
  c_compose->add_option("fileA", file)->required();
  c_compose->add_option("fileB", file_b)->required();

  auto* c_decompose = app.add_subcommand("decompose", "gluing-parallel decomposition");
  c_decompose->add_option("file", file)->required();
  c_decompose->add_option("--level", level, "restrict to a hierarchy level");
  c_decompose->add_option("--side", side)->check(CLI::IsMember({"C", "D"}));

  auto* c_trace = app.add_subcommand("trace", "canonical interval sequence");
  c_trace->add_option("file", file)->required();

  auto* c_untrace = app.add_subcommand("untrace", "poset of an event sequence");
  c_untrace->add_option("file", file, "event text file, - for stdin")->required();

  auto* c_enum = app.add_subcommand("enumerate", "canonical forms, one per line");
  c_enum->add_option("--points", points)->required();
  c_enum->add_option("--kind", kind)->check(CLI::IsMember({"poset", "iposet", "sip", "gp"}));
  c_enum->add_flag("--terms", terms, "append decomposition terms (poset kind)");
  c_enum->add_flag("--connected", connected, "connected posets only");

  auto* c_table = app.add_subcommand("table", "count table");
  c_table->add_option("--max", max_n)->required();
  c_table->add_flag("--stretch", stretch, "compute cells the paper leaves open");
  bool csv = false;
  c_table->add_flag("--csv", csv, "machine-readable rows instead of aligned text");

  auto* c_export = app.add_subcommand("export", "DOT or normalized JSON");
  c_export->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  c_export->add_option("file", file)->required();

  auto* c_laws = app.add_subcommand("laws", "run the algebraic law suite");
  c_laws->add_option("--points", points)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*c_check) return run_check(file, property);

    if (*c_compose) {
      Iposet a = load(file), b = load(file_b);
      Iposet r = op == "glue" ? glue(a, b) : par(a, b);
      std::cout << document_to_json(document_of(r));
      return 0;
    }

    if (*c_decompose) {
      Iposet p = load(file);
      if (level >= 0) {
        bool in = level_membership(p, level, side == "C" ? Side::C : Side::D);
        std::cout << (in ? "IN-" : "NOT-IN-") << side << level << "\n";
        return in ? kExitHolds : kExitFails;
      }
      if (auto term = gp_decompose(p)) {
        std::cout << term_to_string(*term) << "\n";
        return kExitHolds;
      }
      std::cout << "NOT-GP\n";
      return kExitFails;
    }

    if (*c_trace) {
      Iposet p = load(file);
      try {
        std::cout << trace_to_string(canonical_trace(p.poset)) << "\n";
        return kExitHolds;
      } catch (const NotIntervalOrder&) {
        std::cout << "NOT-INTERVAL\n";
        return kExitFails;
      }
    }

    if (*c_untrace) {
      IntervalSeq s = trace_from_string(slurp(file));
      Poset p = order_of_sequence(s);
      std::cout << document_to_json(document_of(embed(p)));
      return 0;
    }

    if (*c_enum) {
      if (kind == "poset") {
        for (const Poset& p : all_posets_list(points)) {
          if (connected && !is_connected(p)) continue;
          std::cout << canonical_form(p).hex();
          if (terms) {
            auto t = gp_decompose(embed(p));
            std::cout << "\t" << (t ? term_to_string(*t) : std::string("NOT-GP"));
          }
          std::cout << "\n";
        }
      } else if (kind == "iposet" || kind == "sip") {
        for (const auto& c : all_iposets(points, kind == "iposet")) std::cout << c.hex() << "\n";
      } else {
        GpClosure cl = gp_closure(points, jobs);
        for (std::size_t i = 0; i < cl.members.size(); ++i)
          if (cl.members[i].size() == points) std::cout << cl.forms[i].hex() << "\n";
      }
      return 0;
    }

    if (*c_table) {
      auto rows = counts_table(max_n, stretch, jobs);
      if (csv) {
        auto cell = [](const std::optional<std::uint64_t>& v) {
          return v ? std::to_string(*v) : std::string("n.a.");
        };
        std::cout << "n,P,SP,GP,GPC,SIP,IP,GPI\n";
        for (const auto& r : rows)
          std::cout << r.n << "," << cell(r.p) << "," << cell(r.sp) << "," << cell(r.gp)
                    << "," << cell(r.gpc) << "," << cell(r.sip) << "," << cell(r.ip) << ","
                    << cell(r.gpi) << "\n";
      } else {
        print_table(rows, std::cout);
      }
      if (stretch)
        std::cout << "# stretch cells beyond the published tiers are new - not paper-verified\n";
      return 0;
    }

    if (*c_export) {
      Iposet p = load(file);
      std::cout << (format == "dot" ? dot_export(p) : document_to_json(document_of(p)));
      return 0;
    }

    if (*c_laws) {
      LawReport report = run_law_suite(points, &std::cout);
      std::cout << (report.ok() ? "all laws hold" : "LAW VIOLATIONS FOUND") << " ("
                << report.total_checked() << " instances)\n";
      return report.ok() ? 0 : kExitFails;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return 0;
}
