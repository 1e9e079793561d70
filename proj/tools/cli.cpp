#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "dc/cancellation.hpp"
#include "dc/doublecrystal.hpp"
#include "dc/growth.hpp"
#include "dc/oracles.hpp"
#include "dc/pictures.hpp"
#include "dc/schutzenberger.hpp"
#include "dc/text_io.hpp"
#include "verify/suites.hpp"

namespace dc::cli {
namespace {

using nlohmann::json;

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// Options shared by most subcommands.
struct Common {
  std::string mode = "integral";
  std::string input;  // empty or "-" = stdin
  bool json = false;
};

void add_common(CLI::App* sub, Common& c, bool with_mode = true) {
  if (with_mode)
    sub->add_option("--mode", c.mode, "binary or integral")
        ->check(CLI::IsMember({"binary", "integral"}))
        ->capture_default_str();
  sub->add_option("-i,--input", c.input, "input file (default: standard input)");
  sub->add_flag("--json", c.json, "JSON output");
}

std::string slurp(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string read_source(const std::string& path, Io& io) {
  if (path.empty() || path == "-") return slurp(io.in);
  std::ifstream f(path);
  if (!f) throw usage_error("cannot open '" + path + "'");
  return slurp(f);
}

bool looks_json(const std::string& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && (text[p] == '[' || text[p] == '{');
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw parse_error("malformed JSON", line, col);
  }
}

std::vector<std::vector<int>> json_rows(const json& j) {
  if (!j.is_array()) throw parse_error("expected an array of rows", 1, 1);
  std::vector<std::vector<int>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw parse_error("expected an array of rows", 1, 1);
    std::vector<int> row;
    for (const auto& x : r) {
      if (!x.is_number_integer()) throw parse_error("expected integer entries", 1, 1);
      row.push_back(x.get<int>());
    }
    rows.push_back(row);
  }
  return rows;
}

template <class Tag>
Matrix<Tag> parse_any(const std::string& text) {
  if (!looks_json(text)) return parse_matrix<Tag>(text);
  json j = parse_json(text);
  if (j.is_object() && j.contains("matrix")) j = j["matrix"];
  return Matrix<Tag>::from_rows(json_rows(j));
}

template <class Tag>
json matrix_json(const Matrix<Tag>& m) {
  return m.trimmed().to_rows();
}

json partition_json(const Partition& p) { return p.parts(); }

Flavor parse_flavor(const std::string& s) {
  for (Flavor f : {Flavor::sst, Flavor::transpose_sst, Flavor::reverse_sst,
                   Flavor::reverse_transpose_sst})
    if (s == flavor_name(f)) return f;
  throw usage_error("unknown flavor '" + s + "'");
}

Tableau parse_tableau(const std::string& text, Flavor f) {
  if (!looks_json(text)) return from_display(f, parse_display(text));
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("rows")) throw parse_error("expected {\"rows\": ...}", 1, 1);
  if (j.contains("flavor")) f = parse_flavor(j["flavor"].get<std::string>());
  Display d;
  d.rows = json_rows(j["rows"]);
  if (j.contains("inner")) d.inner = Partition(j["inner"].get<std::vector<int>>());
  return from_display(f, d);
}

json tableau_json(const Tableau& t) {
  Display d = to_display(t);
  json chain = json::array();
  for (const auto& p : t.chain) chain.push_back(p.parts());
  return {{"flavor", flavor_name(t.flavor)},
          {"inner", d.inner.parts()},
          {"rows", d.rows},
          {"chain", chain}};
}

void print_tableau(std::ostream& out, const char* label, const Tableau& t) {
  if (label) out << label << ' ';
  out << flavor_name(t.flavor) << ' ' << t.shape().str() << '\n' << format_display(to_display(t));
}

Mode to_mode(const std::string& s) { return s == "binary" ? Mode::binary : Mode::integral; }

template <class F>
void with_mode(const std::string& mode, F&& f) {
  if (to_mode(mode) == Mode::binary)
    f(binary_tag{});
  else
    f(integral_tag{});
}

std::set<Direction> parse_directions(const std::string& s) {
  std::set<Direction> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.insert(parse_direction(item));
  if (out.empty()) throw usage_error("no directions given");
  return out;
}

std::string record_str(const MoveRecord& r) {
  std::ostringstream s;
  s << direction_name(r.direction) << ' ' << r.index << " at " << r.row << ',' << r.col;
  if (r.amount != 1) s << " x" << r.amount;
  return s.str();
}

json records_json(const OpSequence& seq) {
  json a = json::array();
  for (const auto& r : seq)
    a.push_back({{"direction", direction_name(r.direction)},
                 {"index", r.index},
                 {"row", r.row},
                 {"col", r.col},
                 {"amount", r.amount}});
  return a;
}

Condition cancelled_condition(Stage s) {
  return s == Stage::tab_first ? Condition::lr : Condition::tableau;
}

template <class Tag>
void scalar_trace(Io& io, const SkewShape& a, const SkewShape& b, Stage stage, Box box) {
  auto ts = terms<Tag>(a, b, stage, box);
  long survivors = 0;
  if (stage == Stage::fully_reduced) {
    io.out << "no cancellation at this stage\n";
    io.out << "survivors " << ts.size() << '\n';
    return;
  }
  Condition c = cancelled_condition(stage);
  const SkewShape& shape = c == Condition::tableau ? a : b;
  for (const auto& [m, sign] : ts) {
    if (condition(m, shape, c)) {
      ++survivors;
      continue;
    }
    Matrix<Tag> partner = involution(m, c, shape);
    if (!(m.trimmed() < partner.trimmed())) continue;
    auto flat = [](const Matrix<Tag>& x) {
      std::string s = format_matrix(x.trimmed());
      std::replace(s.begin(), s.end(), '\n', '/');
      if (!s.empty() && s.back() == '/') s.pop_back();
      return s;
    };
    io.out << (sign > 0 ? "+" : "-") << ' ' << flat(m) << "  <->  " << (sign > 0 ? "-" : "+")
           << ' ' << flat(partner) << '\n';
  }
  io.out << "survivors " << survivors << '\n';
}

Partition opt_partition(const std::string& s) { return parse_partition(s); }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Crystal operations on binary and integral matrices", "dc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // encode
  Common enc;
  std::string enc_flavor = "sst";
  auto* s_encode = app.add_subcommand("encode", "encode a tableau (display text) as a matrix");
  add_common(s_encode, enc);
  s_encode->add_option("--flavor", enc_flavor)->capture_default_str();

  // decode
  Common dec;
  std::string dec_shape;
  auto* s_decode = app.add_subcommand("decode", "decode a matrix as a tableau of a skew shape");
  add_common(s_decode, dec);
  s_decode->add_option("--shape", dec_shape, "skew shape, e.g. 9,8,5,5,3/4,1")->required();

  // move
  Common mv;
  std::string mv_dir;
  std::size_t mv_index = 0;
  int mv_times = 1;
  bool mv_record = false;
  auto* s_move = app.add_subcommand("move", "apply a crystal move");
  add_common(s_move, mv);
  s_move->add_option("--dir", mv_dir, "up, down, left or right")->required();
  s_move->add_option("--index", mv_index)->required();
  s_move->add_option("--times", mv_times)->check(CLI::NonNegativeNumber);
  s_move->add_flag("--record", mv_record, "list the moved units");

  // potential
  Common pot;
  std::string pot_dir;
  std::size_t pot_index = 0;
  bool pot_brackets = false;
  auto* s_pot = app.add_subcommand("potential", "move potentials at a ladder index");
  add_common(s_pot, pot);
  s_pot->add_option("--dir", pot_dir, "one direction (default: all four)");
  s_pot->add_option("--index", pot_index)->required();
  s_pot->add_flag("--brackets", pot_brackets, "also print the bracket strings");

  // exhaust
  Common ex;
  std::string ex_dirs;
  std::optional<std::size_t> ex_bound;
  bool ex_trace = false;
  auto* s_ex = app.add_subcommand("exhaust", "exhaust moves in some directions");
  add_common(s_ex, ex);
  s_ex->add_option("--dirs", ex_dirs, "comma-separated directions")->required();
  s_ex->add_option("--bound", ex_bound, "row/column count for down/right moves");
  s_ex->add_flag("--trace", ex_trace, "list the moves applied");

  // decompose / normal-form
  Common dcp;
  auto* s_decompose = app.add_subcommand("decompose", "the pair (P, Q) of a matrix");
  add_common(s_decompose, dcp);
  Common nf;
  bool nf_matrix = false;
  auto* s_nf = app.add_subcommand("normal-form", "shape of the normal form");
  add_common(s_nf, nf);
  s_nf->add_flag("--matrix", nf_matrix, "also print the normal form matrix");

  // compose
  Common cmp;
  std::string cmp_p, cmp_q;
  auto* s_compose = app.add_subcommand("compose", "inverse of decompose");
  add_common(s_compose, cmp);
  s_compose->add_option("--p", cmp_p, "file holding P ('-' for standard input)")->required();
  s_compose->add_option("--q", cmp_q, "file holding Q ('-' for standard input)")->required();

  // growth
  Common gr;
  std::string gr_orient = "NW";
  bool gr_verify = false;
  auto* s_growth = app.add_subcommand("growth", "growth diagram of a matrix");
  add_common(s_growth, gr);
  s_growth->add_option("--orientation", gr_orient, "NW, NE, SW or SE")->capture_default_str();
  s_growth->add_flag("--verify", gr_verify, "cross-check every cell by normalization");

  // burge
  Common bg;
  std::string bg_lambda, bg_mu, bg_nu, bg_kappa;
  std::optional<int> bg_entry;
  bool bg_trace = false;
  auto* s_burge = app.add_subcommand(
      "burge", "Burge insertion of an integral matrix, or the Burge shape datum");
  add_common(s_burge, bg, false);
  s_burge->add_option("--lambda", bg_lambda);
  s_burge->add_option("--mu", bg_mu);
  s_burge->add_option("--nu", bg_nu);
  s_burge->add_option("--kappa", bg_kappa);
  s_burge->add_option("--entry", bg_entry);
  s_burge->add_flag("--trace", bg_trace);

  // dual-rsk
  Common dr;
  std::string dr_flavor = "row";
  auto* s_drsk = app.add_subcommand("dual-rsk", "dual RSK of a binary matrix");
  add_common(s_drsk, dr, false);
  s_drsk->add_option("--flavor", dr_flavor, "row or col")
      ->check(CLI::IsMember({"row", "col"}))
      ->capture_default_str();

  // dual
  Common du;
  std::string du_flavor = "sst";
  std::optional<std::size_t> du_k;
  auto* s_dual = app.add_subcommand("dual", "Schutzenberger dual of a straight tableau");
  add_common(s_dual, du, false);
  s_dual->add_option("--flavor", du_flavor, "flavor of the input tableau")->capture_default_str();
  s_dual->add_option("--k", du_k, "row bound (default: number of rows)");

  // scalar
  Common sc;
  std::string sc_stage = "fully_reduced", sc_s1, sc_s2;
  bool sc_trace = false, sc_nostable = false;
  std::optional<std::size_t> sc_rows, sc_cols;
  auto* s_scalar = app.add_subcommand("scalar", "alternating sum for a pair of skew shapes");
  add_common(s_scalar, sc);
  s_scalar->add_option("--stage", sc_stage, "brute, tab_first, lr_first or fully_reduced")
      ->capture_default_str();
  s_scalar->add_option("--shape1", sc_s1, "lambda/kappa")->required();
  s_scalar->add_option("--shape2", sc_s2, "nu/mu")->required();
  s_scalar->add_option("--rows", sc_rows, "box rows");
  s_scalar->add_option("--cols", sc_cols, "box columns");
  s_scalar->add_flag("--no-stable", sc_nostable, "skip the stabilization check");
  s_scalar->add_flag("--trace", sc_trace, "list the cancelling pairs");

  // pictures
  auto* s_pic = app.add_subcommand("pictures", "pictures between skew shapes");
  s_pic->require_subcommand(1);
  Common pic;
  std::string pic_dom, pic_cod;
  bool pic_count = false;
  auto pic_shapes = [&](CLI::App* s) {
    s->add_option("--dom", pic_dom, "domain skew shape")->required();
    s->add_option("--cod", pic_cod, "codomain skew shape")->required();
  };
  auto* p_validate = s_pic->add_subcommand("validate", "check a picture (r,c -> r',c' lines)");
  add_common(p_validate, pic, false);
  pic_shapes(p_validate);
  auto* p_lift = s_pic->add_subcommand("lift", "picture with a given projection");
  add_common(p_lift, pic);
  pic_shapes(p_lift);
  auto* p_project = s_pic->add_subcommand("project", "projection of a picture");
  add_common(p_project, pic);
  pic_shapes(p_project);
  auto* p_enum = s_pic->add_subcommand("enumerate", "all pictures dom -> cod");
  add_common(p_enum, pic, false);
  pic_shapes(p_enum);
  p_enum->add_flag("--count", pic_count, "print only the number");

  // verify
  std::vector<std::string> vf_names;
  bool vf_list = false, vf_parallel = false, vf_json = false;
  auto* s_verify = app.add_subcommand("verify", "run property suites (default: all)");
  s_verify->add_option("suites", vf_names, "suite names or 'all'");
  s_verify->add_flag("--list", vf_list, "list suite names");
  s_verify->add_flag("--parallel", vf_parallel, "run suites concurrently");
  s_verify->add_flag("--json", vf_json, "JSON output");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*s_encode) {
      Tableau t = parse_tableau(read_source(enc.input, io), parse_flavor(enc_flavor));
      with_mode(enc.mode, [&](auto tag) {
        using Tag = decltype(tag);
        Matrix<Tag> m;
        if constexpr (Tag::binary)
          m = encode_binary(t);
        else
          m = encode_integral(t);
        if (enc.json)
          out << json{{"matrix", matrix_json(m)}}.dump() << '\n';
        else
          out << format_matrix(m.trimmed());
      });
    } else if (*s_decode) {
      SkewShape shape = parse_skew(dec_shape);
      with_mode(dec.mode, [&](auto tag) {
        using Tag = decltype(tag);
        auto m = parse_any<Tag>(read_source(dec.input, io));
        Tableau t = decode(m, shape);
        if (dec.json)
          out << tableau_json(t).dump() << '\n';
        else
          out << format_display(to_display(t));
      });
    } else if (*s_move) {
      Direction d = parse_direction(mv_dir);
      with_mode(mv.mode, [&](auto tag) {
        using Tag = decltype(tag);
        auto m = parse_any<Tag>(read_source(mv.input, io));
        OpSequence seq;
        for (int t = 0; t < mv_times; ++t) {
          MoveRecord rec{};
          if (!apply_move(m, d, mv_index, &rec))
            throw domain_error("no " + std::string(direction_name(d)) + " move at index " +
                               std::to_string(mv_index) + " (after " + std::to_string(t) +
                               " applied)");
          seq.push_back(rec);
        }
        if (mv.json) {
          out << json{{"matrix", matrix_json(m)}, {"moves", records_json(seq)}}.dump() << '\n';
          return;
        }
        if (mv_record)
          for (const auto& r : seq) out << "# " << record_str(r) << '\n';
        out << format_matrix(m.trimmed());
      });
    } else if (*s_pot) {
      with_mode(pot.mode, [&](auto tag) {
        using Tag = decltype(tag);
        auto m = parse_any<Tag>(read_source(pot.input, io));
        std::vector<Direction> dirs = {Direction::up, Direction::down, Direction::left,
                                       Direction::right};
        if (!pot_dir.empty()) dirs = {parse_direction(pot_dir)};
        json j = json::object();
        for (Direction d : dirs) {
          int p = potential(m, d, pot_index);
          j[direction_name(d)] = p;
          if (!pot.json) {
            if (dirs.size() == 1)
              out << p << '\n';
            else
              out << direction_name(d) << ' ' << p << '\n';
          }
        }
        if (pot_brackets)
          for (Axis a : {Axis::rows, Axis::cols}) {
            auto prof = paren_profile(m, a, pot_index);
            j[a == Axis::rows ? "rows" : "cols"] = prof.symbols;
            if (!pot.json) out << (a == Axis::rows ? "rows " : "cols ") << prof.symbols << '\n';
          }
        if (pot.json) out << j.dump() << '\n';
      });
    } else if (*s_ex) {
      auto dirs = parse_directions(ex_dirs);
      with_mode(ex.mode, [&](auto tag) {
        using Tag = decltype(tag);
        auto m = parse_any<Tag>(read_source(ex.input, io));
        auto [r, seq] = exhaust(m, dirs, ex_bound);
        if (ex.json) {
          out << json{{"matrix", matrix_json(r)}, {"moves", records_json(seq)}}.dump() << '\n';
          return;
        }
        if (ex_trace)
          for (const auto& rec : seq) out << "# " << record_str(rec) << '\n';
        out << format_matrix(r.trimmed());
      });
    } else if (*s_decompose) {
      with_mode(dcp.mode, [&](auto tag) {
        using Tag = decltype(tag);
        auto m = parse_any<Tag>(read_source(dcp.input, io));
        auto d = decompose(m);
        Partition lambda = normal_form(m);
        if (dcp.json) {
          out << json{{"P", matrix_json(d.p)},
                      {"Q", matrix_json(d.q)},
                      {"shape", partition_json(lambda)}}
                     .dump()
              << '\n';
          return;
        }
        out << "P\n" << format_matrix(d.p.trimmed()) << "Q\n" << format_matrix(d.q.trimmed());
        out << "shape " << lambda.str() << '\n';
      });
    } else if (*s_nf) {
      with_mode(nf.mode, [&](auto tag) {
        using Tag = decltype(tag);
        auto m = parse_any<Tag>(read_source(nf.input, io));
        Partition lambda = normal_form(m);
        if (nf.json) {
          json j{{"shape", partition_json(lambda)}};
          if (nf_matrix) j["matrix"] = matrix_json(exhaust(m, {Direction::up, Direction::left}).first);
          out << j.dump() << '\n';
          return;
        }
        out << lambda.str() << '\n';
        if (nf_matrix)
          out << format_matrix(exhaust(m, {Direction::up, Direction::left}).first.trimmed());
      });
    } else if (*s_compose) {
      if (cmp_p == "-" && cmp_q == "-") throw usage_error("only one of --p/--q may be '-'");
      with_mode(cmp.mode, [&](auto tag) {
        using Tag = decltype(tag);
        auto p = parse_any<Tag>(read_source(cmp_p, io));
        auto q = parse_any<Tag>(read_source(cmp_q, io));
        auto m = compose(p, q);
        if (cmp.json)
          out << json{{"matrix", matrix_json(m)}}.dump() << '\n';
        else
          out << format_matrix(m.trimmed());
      });
    } else if (*s_growth) {
      Corner c = parse_corner(gr_orient);
      with_mode(gr.mode, [&](auto tag) {
        using Tag = decltype(tag);
        auto m = parse_any<Tag>(read_source(gr.input, io)).trimmed();
        GrowthDiagram g = growth_diagram(m, c, gr_verify);
        if (!gr.json) {
          out << render(g);
          return;
        }
        json grid = json::array();
        for (const auto& row : g.grid) {
          json jr = json::array();
          for (const auto& p : row) jr.push_back(partition_json(p));
          grid.push_back(jr);
        }
        out << json{{"orientation", corner_name(g.orientation)},
                    {"mode", g.mode == Mode::binary ? "binary" : "integral"},
                    {"entries", g.entries},
                    {"grid", grid}}
                   .dump()
            << '\n';
      });
    } else if (*s_burge) {
      bool datum = !bg_mu.empty() || !bg_nu.empty() || !bg_lambda.empty() || !bg_kappa.empty();
      if (!datum) {
        auto m = parse_any<integral_tag>(read_source(bg.input, io));
        auto pr = burge(m);
        if (bg.json) {
          out << json{{"P", tableau_json(pr.first)}, {"Q", tableau_json(pr.second)}}.dump() << '\n';
        } else {
          print_tableau(out, "insertion", pr.first);
          print_tableau(out, "recording", pr.second);
        }
      } else if (!bg_lambda.empty()) {
        if (bg_mu.empty() || bg_nu.empty() || !bg_entry)
          throw usage_error("forward datum needs --lambda, --mu, --nu and --entry");
        std::vector<BurgeStep> trace;
        Partition k = burge_forward(opt_partition(bg_lambda), opt_partition(bg_mu),
                                    opt_partition(bg_nu), *bg_entry, &trace);
        if (bg.json) {
          json t = json::array();
          for (const auto& s : trace)
            t.push_back({{"i", s.i}, {"d", s.d}, {"kappa_i", s.kappa_i}, {"c", s.c}});
          out << json{{"kappa", partition_json(k)}, {"trace", t}}.dump() << '\n';
        } else {
          if (bg_trace)
            for (const auto& s : trace)
              out << "i=" << s.i << " d=" << s.d << " kappa_i=" << s.kappa_i << " c=" << s.c
                  << '\n';
          out << k.str() << '\n';
        }
      } else {
        if (bg_mu.empty() || bg_nu.empty() || bg_kappa.empty())
          throw usage_error("backward datum needs --mu, --nu and --kappa");
        auto [lambda, m] =
            burge_backward(opt_partition(bg_mu), opt_partition(bg_nu), opt_partition(bg_kappa));
        if (bg.json)
          out << json{{"lambda", partition_json(lambda)}, {"entry", m}}.dump() << '\n';
        else
          out << lambda.str() << ' ' << m << '\n';
      }
    } else if (*s_drsk) {
      auto m = parse_any<binary_tag>(read_source(dr.input, io));
      auto pr = dr_flavor == "row" ? dual_rsk_row(m) : dual_rsk_col(m);
      if (dr.json) {
        out << json{{"insertion", tableau_json(pr.first)}, {"recording", tableau_json(pr.second)}}
                   .dump()
            << '\n';
      } else {
        print_tableau(out, "insertion", pr.first);
        print_tableau(out, "recording", pr.second);
      }
    } else if (*s_dual) {
      Tableau t = parse_tableau(read_source(du.input, io), parse_flavor(du_flavor));
      Tableau d = dual(t, du_k);
      if (du.json)
        out << tableau_json(d).dump() << '\n';
      else
        print_tableau(out, nullptr, d);
    } else if (*s_scalar) {
      Stage stage = parse_stage(sc_stage);
      SkewShape a = parse_skew(sc_s1), b = parse_skew(sc_s2);
      Mode mode = to_mode(sc.mode);
      std::optional<Box> box;
      if (sc_rows || sc_cols) {
        Box d = default_box(a, b, mode);
        box = Box{sc_rows.value_or(d.rows), sc_cols.value_or(d.cols)};
      }
      long v = alternating_sum(a, b, stage, mode, box, !sc_nostable && !box);
      if (sc.json) {
        out << json{{"value", v}, {"stage", stage_name(stage)}, {"mode", sc.mode}}.dump() << '\n';
      } else {
        out << v << '\n';
      }
      if (sc_trace) {
        Box bx = box.value_or(default_box(a, b, mode));
        with_mode(sc.mode, [&](auto tag) { scalar_trace<decltype(tag)>(io, a, b, stage, bx); });
      }
    } else if (*s_pic) {
      SkewShape dom = parse_skew(pic_dom), cod = parse_skew(pic_cod);
      if (*p_validate) {
        auto f = parse_picture(read_source(pic.input, io));
        bool ok = validate(f, dom, cod);
        out << (pic.json ? json{{"valid", ok}}.dump() : std::string(ok ? "valid" : "invalid"))
            << '\n';
        return ok ? 0 : 1;
      }
      if (*p_lift) {
        with_mode(pic.mode, [&](auto tag) {
          using Tag = decltype(tag);
          auto m = parse_any<Tag>(read_source(pic.input, io));
          out << format_picture(lift(m, dom, cod));
        });
      } else if (*p_project) {
        Picture p{dom, cod, parse_picture(read_source(pic.input, io))};
        if (!validate(p)) throw domain_error("not a picture " + dom.str() + " -> " + cod.str());
        if (to_mode(pic.mode) == Mode::binary)
          out << format_matrix(project_bin(p).trimmed());
        else
          out << format_matrix(project_int(p).trimmed());
      } else if (*p_enum) {
        auto all = enumerate_pictures(dom, cod);
        if (pic_count || pic.json) {
          out << (pic.json ? json{{"count", all.size()}}.dump() : std::to_string(all.size()))
              << '\n';
        } else {
          out << all.size() << '\n';
          for (const auto& p : all) out << '\n' << format_picture(p);
        }
      }
    } else if (*s_verify) {
      if (vf_list) {
        for (const auto& s : verify::suites())
          out << s.name << "  " << s.summary << '\n';
        return 0;
      }
      std::vector<const verify::Suite*> chosen;
      if (vf_names.empty() || (vf_names.size() == 1 && vf_names[0] == "all")) {
        for (const auto& s : verify::suites()) chosen.push_back(&s);
      } else {
        for (const auto& n : vf_names) {
          const verify::Suite* s = verify::find_suite(n);
          if (!s) throw usage_error("unknown suite '" + n + "' (see verify --list)");
          chosen.push_back(s);
        }
      }
      auto seed = verify::seed_from_env();
      std::vector<verify::Result> results;
      if (vf_parallel) {
        std::vector<std::future<verify::Result>> fs;
        for (const auto* s : chosen)
          fs.push_back(std::async(std::launch::async, [s, seed] { return verify::run_suite(*s, seed); }));
        for (auto& f : fs) results.push_back(f.get());
      } else {
        for (const auto* s : chosen) results.push_back(verify::run_suite(*s, seed));
      }
      bool all_ok = true;
      json j = json::array();
      for (const auto& r : results) {
        all_ok = all_ok && r.ok;
        if (vf_json) {
          j.push_back({{"suite", r.name},
                       {"ok", r.ok},
                       {"checks", r.checks},
                       {"failures", r.failures},
                       {"seconds", r.seconds},
                       {"notes", r.notes}});
          continue;
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3fs", r.seconds);
        out << (r.ok ? "PASS " : "FAIL ") << r.name << "  checks=" << r.checks
            << " failures=" << r.failures << "  " << buf << '\n';
        for (const auto& n : r.notes) out << "    " << n << '\n';
      }
      if (vf_json) out << json{{"seed", seed}, {"suites", j}}.dump() << '\n';
      return all_ok ? 0 : 1;
    }
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace dc::cli
