#include "seqforge/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "seqforge/closedforms.hpp"
#include "seqforge/corpus.hpp"
#include "seqforge/curling.hpp"
#include "seqforge/les.hpp"
#include "seqforge/recaman.hpp"
#include "seqforge/seqmodel.hpp"
#include "seqforge/stones.hpp"
#include "seqforge/trajectories.hpp"

namespace seqforge::cli {

namespace {

// Domain failures (bad input files, verifier rejections) exit with 2.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "-" selects standard output.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot write " + path);
  file << text;
}

BFileRows generate_rows(const std::string& family, std::uint64_t count) {
  if (family == "recaman") {
    recaman::Generator g(count);
    return take(g, count);
  }
  if (family == "gijswijt") {
    curling::GijswijtStream g;
    return take(g, count);
  }
  if (family == "ekg" || family == "yellowstone" || family == "enotswolley") {
    const les::Family f = family == "ekg"           ? les::Family::EKG
                          : family == "yellowstone" ? les::Family::Yellowstone
                                                    : les::Family::EnotsWolley;
    les::Generator g(f, count);
    return take(g, count);
  }
  Terms terms;
  std::int64_t offset = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (family == "catalan") {
      terms.push_back(closedforms::catalan(i));
    } else if (family == "pancake") {
      terms.push_back(closedforms::pancake(i));
    } else {
      offset = 1;
      terms.push_back(closedforms::bagel(i + 1));
    }
  }
  return rows_from_terms(terms, offset);
}

std::string join_values(const BFileRows& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ',';
    out += to_string(rows[i].value);
  }
  return out;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const BigInt& t : parse_term_list(text)) {
    auto v = to_u64(t);
    if (!v || *v == 0) throw DomainError("terms must be positive 64-bit integers");
    out.push_back(*v);
  }
  return out;
}

trajectories::MapKind parse_map(const std::string& name) {
  return name == "aliquot" ? trajectories::MapKind::Aliquot : trajectories::MapKind::SigmaPhiMean;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer sequence toolkit", "seqforge"};
  app.require_subcommand(1);
  unsigned workers = 1;
  app.add_option("--workers", workers, "Worker threads for stones solve and classify")
      ->check(CLI::Range(1u, 256u));

  std::function<void()> action;

  // generate
  auto* gen = app.add_subcommand("generate", "Emit the first terms of a sequence");
  std::string family;
  std::uint64_t count = 0;
  std::string bfile;
  gen->add_option("family", family)
      ->required()
      ->check(CLI::IsMember({"recaman", "gijswijt", "ekg", "yellowstone", "enotswolley", "catalan",
                             "pancake", "bagel"}));
  gen->add_option("--count", count)->required();
  gen->add_option("--bfile", bfile, "Write a b-file to PATH ('-' for standard output)");
  gen->callback([&] {
    action = [&] {
      const BFileRows rows = generate_rows(family, count);
      if (bfile.empty()) {
        out << join_values(rows) << '\n';
      } else {
        emit(bfile, write_bfile(rows), out);
      }
    };
  });

  // curling
  auto* curl = app.add_subcommand("curling", "Curling number of a finite sequence");
  std::string curl_terms;
  curl->add_option("--terms", curl_terms)->required();
  curl->callback([&] {
    action = [&] {
      const auto seq = parse_u64_list(curl_terms);
      const auto d = curling::curling_number(seq);
      const std::span<const std::uint64_t> s(seq);
      auto join = [](std::span<const std::uint64_t> part) {
        std::string text;
        for (std::size_t i = 0; i < part.size(); ++i) text += (i ? "," : "") + std::to_string(part[i]);
        return text;
      };
      out << "k=" << d.k << '\n';
      out << "x=" << join(s.first(d.x_len)) << '\n';
      out << "y=" << join(s.subspan(d.x_len, d.y_len)) << '\n';
    };
  });

  // trajectory
  auto* traj = app.add_subcommand("trajectory", "Iterate an aliquot-style map");
  std::string map_name;
  std::string start_text;
  std::size_t max_steps = 0;
  traj->add_option("--map", map_name)->required()->check(CLI::IsMember({"aliquot", "sigmaphi"}));
  traj->add_option("--start", start_text)->required();
  traj->add_option("--max-steps", max_steps)->required()->check(CLI::PositiveNumber);
  traj->callback([&] {
    action = [&] {
      auto start = parse_bigint(start_text);
      if (!start || sgn(*start) <= 0) throw DomainError("--start must be a positive integer");
      const auto rep = trajectories::trajectory(parse_map(map_name), *start, max_steps);
      out << "map=" << map_name << '\n';
      out << "start=" << to_string(rep.start) << '\n';
      out << "outcome=" << trajectories::to_string(rep.outcome) << '\n';
      out << "length=" << rep.terms.size() << '\n';
      out << "distinct=" << rep.distinct_count << '\n';
      out << "terms=" << join_terms(rep.terms) << '\n';
    };
  });

  // classify
  auto* cls = app.add_subcommand("classify", "Outcome of every start below a bound");
  std::string cls_map;
  std::uint64_t below = 0;
  std::size_t cls_steps = 0;
  cls->add_option("--map", cls_map)->required()->check(CLI::IsMember({"aliquot", "sigmaphi"}));
  cls->add_option("--below", below)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{10'000'000}));
  cls->add_option("--max-steps", cls_steps)->required()->check(CLI::PositiveNumber);
  cls->callback([&] {
    action = [&] {
      for (const auto& [n, o] : trajectories::classify_range(parse_map(cls_map), below, cls_steps, workers)) {
        out << n << ' ' << trajectories::to_string(o) << '\n';
      }
    };
  });

  // lookup
  auto* look = app.add_subcommand("lookup", "Find sequences containing the query terms");
  std::string corpus_path;
  std::string query;
  look->add_option("--corpus", corpus_path, "Stripped file or b-file directory (default: built-in seed)");
  look->add_option("--query", query)->required();
  look->callback([&] {
    action = [&] {
      const auto index =
          corpus::build_index(corpus_path.empty() ? corpus::seed_corpus() : corpus::load(corpus_path));
      const Terms q = parse_term_list(query);
      for (const auto& r : corpus::lookup(index, q)) {
        out << r.rank << ' ' << r.anum.str() << ' ' << r.match_position << ' ' << r.match_length << '\n';
      }
    };
  });

  // order
  auto* ord = app.add_subcommand("order", "Compare two term lists in placement order");
  std::string order_a, order_b;
  ord->add_option("--a", order_a)->required();
  ord->add_option("--b", order_b)->required();
  ord->callback([&] {
    action = [&] {
      const Terms a = parse_term_list(order_a);
      const Terms b = parse_term_list(order_b);
      out << to_string(compare(a, b)) << '\n';
    };
  });

  // stones
  auto* stones_cmd = app.add_subcommand("stones", "Stepping stones boards");
  stones_cmd->require_subcommand(1);
  std::string board_path;
  int stones_n = 0;
  std::string kind;
  int radius = 6;
  unsigned beam = 0;
  std::string warm;
  std::string format = "doc";
  std::string svg_path;
  int max_n = 6;

  auto* sv = stones_cmd->add_subcommand("verify", "Check a board document");
  sv->add_option("--board", board_path)->required();
  sv->callback([&] {
    action = [&] {
      stones::Board b;
      try {
        b = stones::from_document(read_text(board_path));
      } catch (const ParseError& e) {
        throw DomainError(e.what());
      }
      if (auto v = stones::verify(b)) {
        throw DomainError("violation at label " + std::to_string(v->label) + " square (" +
                          std::to_string(v->square.row) + "," + std::to_string(v->square.col) +
                          ") observed " + std::to_string(v->observed) + ": " + v->reason);
      }
      out << "valid ones=" << b.ones.size() << " max=" << b.max_label() << '\n';
    };
  });

  auto add_render = [&](CLI::App* sub) {
    sub->add_option("--format", format, "doc, ascii or none")->check(CLI::IsMember({"doc", "ascii", "none"}));
    sub->add_option("--svg", svg_path, "Also write an SVG render to PATH ('-' for standard output)");
  };
  auto render = [&](const stones::Board& b) {
    if (format == "doc") out << stones::to_document(stones::normalized(b));
    if (format == "ascii") out << stones::render_ascii(b);
    if (!svg_path.empty()) emit(svg_path, stones::render_svg(b), out);
  };
  auto construct_board = [](const std::string& k, int n) {
    return k == "linear" ? stones::linear_construction(n) : stones::chimney_construction(n);
  };

  auto* ss = stones_cmd->add_subcommand("solve", "Search for a high-scoring board");
  ss->add_option("-n", stones_n)->required()->check(CLI::Range(1, 64));
  ss->add_option("--radius", radius)->check(CLI::Range(1, 100));
  ss->add_option("--beam", beam, "Beam width; 0 selects depth-first search");
  ss->add_option("--warm", warm, "Warm start from a construction")->check(CLI::IsMember({"linear", "chimney"}));
  add_render(ss);
  ss->callback([&] {
    action = [&] {
      stones::SearchConfig config;
      config.radius = radius;
      config.beam = beam;
      config.workers = workers;
      if (!warm.empty()) config.warm_start = construct_board(warm, stones_n);
      const auto r = stones::solve(stones_n, config);
      out << "n=" << r.n << " best=" << r.best << " exhaustive=" << bool_str(r.exhaustive) << '\n';
      render(r.board);
    };
  });

  auto* sc = stones_cmd->add_subcommand("construct", "Build a lower-bound construction");
  sc->add_option("--kind", kind)->required()->check(CLI::IsMember({"linear", "chimney"}));
  sc->add_option("-n", stones_n)->required()->check(CLI::Range(3, 10000));
  add_render(sc);
  sc->callback([&] {
    action = [&] {
      const auto b = construct_board(kind, stones_n);
      out << "n=" << stones_n << " max=" << b.max_label() << '\n';
      render(b);
    };
  });

  auto* sb = stones_cmd->add_subcommand("bounds", "Table of lower bounds for n = 1..N");
  sb->add_option("--max-n", max_n)->check(CLI::Range(1, 64));
  sb->add_option("--radius", radius)->check(CLI::Range(1, 100));
  sb->add_option("--beam", beam, "Beam width used for n >= 3");
  sb->callback([&] {
    action = [&] {
      out << "n best exhaustive source\n";
      for (int n = 1; n <= max_n; ++n) {
        stones::SearchConfig config;
        config.radius = radius;
        config.workers = workers;
        std::string source = "dfs";
        if (n >= 3) {
          config.beam = beam ? beam : config.fallback_beam;
          config.warm_start = stones::chimney_construction(n);
          source = "beam";
        }
        const auto r = stones::solve(n, config);
        if (n >= 3 && r.best == config.warm_start->max_label() && r.board == *config.warm_start) {
          source = "chimney";
        }
        out << n << ' ' << r.best << ' ' << bool_str(r.exhaustive) << ' ' << source << '\n';
      }
    };
  });

  // spiral
  auto* sp = app.add_subcommand("spiral", "Draw the Recaman spiral");
  std::uint64_t spiral_count = 0;
  std::string spiral_svg;
  sp->add_option("--count", spiral_count)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1'000'000}));
  sp->add_option("--svg", spiral_svg)->required();
  sp->callback([&] {
    action = [&] {
      const auto t = recaman::terms(spiral_count);
      emit(spiral_svg, recaman::spiral_svg(recaman::spiral(t)), out);
    };
  });

  // identity / sigmagap
  auto* id = app.add_subcommand("identity", "Check the central binomial square-sum identity");
  std::uint64_t id_n = 0;
  id->add_option("--n", id_n)->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000}));
  id->callback([&] {
    action = [&] {
      const auto r = closedforms::binomial_identity(id_n);
      out << "n=" << r.n << " lhs=" << to_string(r.lhs) << " rhs=" << to_string(r.rhs)
          << " holds=" << bool_str(r.holds) << '\n';
    };
  });
  auto* sg = app.add_subcommand("sigmagap", "floor(n sqrt n) - sigma(n)");
  std::uint64_t sg_n = 0;
  sg->add_option("--n", sg_n)->required();
  sg->callback([&] {
    action = [&] { out << to_string(closedforms::sigma_gap(sg_n)) << '\n'; };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace seqforge::cli
