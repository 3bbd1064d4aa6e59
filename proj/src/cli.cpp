#include "bandposet/cli.hpp"

#include <CLI11.hpp>

#include <sstream>

#include "bandposet/census.hpp"
#include "bandposet/constructions.hpp"
#include "bandposet/errors.hpp"
#include "bandposet/fixtures.hpp"
#include "bandposet/search.hpp"
#include "bandposet/text_io.hpp"

namespace bandposet {

namespace {

std::vector<Element> parse_list(const std::string& text, const char* flag) {
  std::vector<Element> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() ||
        item.find_first_not_of("0123456789") != std::string::npos ||
        item.size() > 9) {
      throw InputError(std::string(flag) + ": bad element '" + item + "'");
    }
    out.push_back(static_cast<Element>(std::stoul(item)));
  }
  return out;
}

// "poset-file:band-file"
Structure load_pair(const std::string& arg) {
  const auto colon = arg.rfind(':');
  if (colon == std::string::npos) {
    throw InputError("expected <poset-file>:<band-file>, got '" + arg + "'");
  }
  return {parse_poset_file(arg.substr(0, colon)),
          parse_band_file(arg.substr(colon + 1))};
}

void print_result(std::ostream& out, const SearchResult& r) {
  if (!r.ops.empty()) {
    out << "YES\n" << emit_band(r.ops.front());
    return;
  }
  out << "NO\n";
  if (r.root_contradiction) {
    const auto& c = *r.root_contradiction;
    out << "contradiction at " << c.x << "·" << c.y << " (" << c.constraint
        << ")\n";
  } else {
    out << "search exhausted after " << r.stats.nodes << " nodes\n";
  }
}

struct Options {
  std::string file;
  std::string second_file;
  std::string variety = "rrb";
  bool count_only = false;
  std::vector<std::string> parts;
  std::string top;
  std::vector<std::string> tails;
  std::string order;
  std::string forest;
  std::string semilattice;
  std::string map;
  std::string cofinal;
  unsigned max_n = 0;
  std::string out_path;
  unsigned threads = 1;
  std::string name;
  bool band = false;
  unsigned width = 3;
  std::string dir;
};

void write_fixtures(const std::string& dir, std::ostream& out) {
  for (const auto& name : poset_fixture_names()) {
    const auto path = dir + "/" + name + ".poset";
    write_file(path, emit_poset(named_poset(name).poset));
    out << path << "\n";
  }
  for (const auto& name : band_fixture_names()) {
    const auto path = dir + "/" + name + ".band";
    write_file(path, emit_band(named_band(name)));
    out << path << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Admissible band operations on finite posets", "bandposet"};
  app.require_subcommand(1);
  Options o;
  auto variety_opt = [&](CLI::App* sub) {
    sub->add_option("--variety", o.variety, "rrb, rnb or comm")
        ->check(CLI::IsMember({"rrb", "rnb", "comm"}));
  };

  auto* check = app.add_subcommand("check", "Decide whether a poset admits an operation");
  check->add_option("file", o.file, "poset file")->required();
  variety_opt(check);

  auto* enumerate = app.add_subcommand("enumerate-ops", "List or count admissible operations");
  enumerate->add_option("file", o.file, "poset file")->required();
  variety_opt(enumerate);
  enumerate->add_flag("--count-only", o.count_only, "print the count only");

  auto* verify = app.add_subcommand("verify-table", "Check a table against a poset");
  verify->add_option("poset", o.file, "poset file")->required();
  verify->add_option("band", o.second_file, "band file")->required();
  variety_opt(verify);

  auto* construct = app.add_subcommand("construct", "Build an operation from witnesses");
  construct->require_subcommand(1);
  auto* sum = construct->add_subcommand("sum", "ordered sum, first part lowest");
  sum->add_option("--part", o.parts, "<poset>:<band>, repeatable")->required();
  auto* uni = construct->add_subcommand("union", "union of sums over a common part");
  uni->add_option("--top", o.top, "<poset>:<band> with a top element")->required();
  uni->add_option("--tail", o.tails, "<poset>:<band>, repeatable")->required();
  auto* tree = construct->add_subcommand("tree", "tree or forest operation");
  tree->add_option("file", o.file, "poset file")->required();
  tree->add_option("--order", o.order, "minimal elements, comma separated");
  auto* pre = construct->add_subcommand("preimage", "operation pulled back along a map onto a forest");
  pre->add_option("file", o.file, "poset file")->required();
  pre->add_option("--forest", o.forest, "forest poset file")->required();
  pre->add_option("--map", o.map, "image of each element, comma separated")->required();
  pre->add_option("--order", o.order, "minimal order for the forest plus a top");
  auto* nm = construct->add_subcommand("normal-map", "right-normal band from a map into a meet-semilattice");
  nm->add_option("file", o.file, "poset file")->required();
  nm->add_option("--semilattice", o.semilattice, "meet-semilattice poset file")->required();
  nm->add_option("--map", o.map, "image of each element, comma separated")->required();
  nm->add_option("--cofinal", o.cofinal, "cofinal elements to check, comma separated");

  auto* census = app.add_subcommand("census", "Counts for every small unlabeled poset");
  census->add_option("--max-n", o.max_n, "largest size, at most 5")->required();
  census->add_option("--out", o.out_path, "output file")->required();
  census->add_option("--threads", o.threads, "worker threads");

  auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT");
  dot->add_option("file", o.file, "poset file")->required();

  auto* fixtures = app.add_subcommand("fixtures", "Catalog posets and tables");
  fixtures->require_subcommand(1);
  auto* list = fixtures->add_subcommand("list", "list fixture names");
  auto* emit = fixtures->add_subcommand("emit", "print one fixture");
  emit->add_option("name", o.name, "fixture name")->required();
  emit->add_flag("--band", o.band, "print the table fixture of that name");
  emit->add_option("--width", o.width, "crown width");
  auto* write = fixtures->add_subcommand("write", "write every fixture file");
  write->add_option("dir", o.dir, "target directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const Variety v = parse_variety(o.variety);
    if (*check) {
      const auto p = parse_poset_file(o.file);
      print_result(out, find_admissible(p, {v, SearchMode::kFirst}));
    } else if (*enumerate) {
      const auto p = parse_poset_file(o.file);
      if (o.count_only) {
        out << find_admissible(p, {v, SearchMode::kCount}).count << "\n";
      } else {
        const auto r = find_admissible(p, {v, SearchMode::kAll});
        for (std::size_t i = 0; i < r.ops.size(); ++i) {
          out << (i ? "\n" : "") << emit_band(r.ops[i]);
        }
        out << "# " << r.count << " operations\n";
      }
    } else if (*verify) {
      const auto p = parse_poset_file(o.file);
      const auto op = parse_band_file(o.second_file);
      if (op.size() != p.size()) {
        out << "FAIL: table has " << op.size() << " elements, poset has "
            << p.size() << "\n";
      } else if (auto verdict = check_variety(op, v); !verdict) {
        out << "FAIL: " << verdict.describe() << "\n";
      } else if (!is_admissible(op, p)) {
        out << "FAIL: not admissible for the poset\n";
      } else {
        out << "OK\n";
      }
    } else if (*sum) {
      std::vector<Structure> parts;
      for (const auto& s : o.parts) parts.push_back(load_pair(s));
      const auto r = ordered_sum(parts);
      out << emit_poset(r.poset) << emit_band(r.op);
    } else if (*uni) {
      std::vector<Structure> tails;
      for (const auto& s : o.tails) tails.push_back(load_pair(s));
      const auto r = union_with_common_top_part(load_pair(o.top), tails);
      out << emit_poset(r.poset) << emit_band(r.op);
    } else if (*tree) {
      const auto p = parse_poset_file(o.file);
      const auto order = o.order.empty() ? std::vector<Element>{}
                                         : parse_list(o.order, "--order");
      out << emit_band(is_tree(p) ? foliated_tree_op(p, order)
                                  : forest_op(p, order));
    } else if (*pre) {
      const auto p = parse_poset_file(o.file);
      const auto t = parse_poset_file(o.forest);
      const PosetMap f(p, t, parse_list(o.map, "--map"));
      std::vector<BandOp> fiber_ops;
      for (Element a = 0; a < t.size(); ++a) {
        const auto fiber = p.induced(f.fiber(a));
        auto r = find_admissible(fiber, {Variety::kRrb, SearchMode::kFirst});
        if (r.ops.empty()) {
          throw InputError("fiber over " + std::to_string(a) +
                           " admits no operation");
        }
        fiber_ops.push_back(r.ops.front());
      }
      const auto order = o.order.empty() ? std::vector<Element>{}
                                         : parse_list(o.order, "--order");
      out << emit_band(preimage_op(f, fiber_ops, decompose(adjoin_top(t), order)));
    } else if (*nm) {
      const auto p = parse_poset_file(o.file);
      const auto s = parse_poset_file(o.semilattice);
      const PosetMap f(p, s, parse_list(o.map, "--map"));
      std::optional<ElementSet> cofinal;
      if (!o.cofinal.empty()) {
        ElementSet c;
        for (Element e : parse_list(o.cofinal, "--cofinal")) {
          if (e >= p.size()) throw InputError("--cofinal: element out of range");
          c.insert(e);
        }
        cofinal = c;
      }
      out << emit_band(normal_from_map(f, cofinal));
    } else if (*census) {
      const auto records = run_census(o.max_n, o.threads);
      std::ostringstream buf;
      write_census(records, buf);
      write_file(o.out_path, buf.str());
      out << records.size() << " records written to " << o.out_path << "\n";
    } else if (*dot) {
      out << hasse_dot(parse_poset_file(o.file));
    } else if (*list) {
      for (const auto& n : poset_fixture_names()) out << "poset " << n << "\n";
      for (const auto& n : band_fixture_names()) out << "band " << n << "\n";
    } else if (*emit) {
      if (o.band) {
        out << emit_band(named_band(o.name));
      } else {
        out << emit_poset(named_poset(o.name, o.width).poset);
      }
    } else if (*write) {
      write_fixtures(o.dir, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}

}  // namespace bandposet
