#include "gp_cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gp/certificate.hpp"
#include "gp/isofunctions.hpp"
#include "gp/reduction.hpp"
#include "gp/thue.hpp"
#include "gp/vertex_oracle.hpp"

namespace gp::cli {

namespace {

class LineError {
 public:
  explicit LineError(std::size_t line) : _line(line) {}
  [[noreturn]] void operator()(std::string const& why) const {
    throw Error(Errc::Parse, "line " + std::to_string(_line) + ": " + why);
  }

 private:
  std::size_t _line;
};

template <typename T>
T to_number(std::string const& token, LineError const& fail) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    fail("expected a number, got '" + token + "'");
  }
  return value;
}

std::string read_file(std::string const& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    throw Error(Errc::Parse, "cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

RawPresentation parse_input(std::string_view text) {
  RawPresentation raw;
  std::map<VertexId, std::size_t> slot;
  bool have_vertices = false;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t lineno = 0;

  while (std::getline(is, line)) {
    ++lineno;
    LineError const fail(lineno);
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::vector<std::string> t;
    for (std::string tok; ls >> tok;) {
      t.push_back(tok);
    }
    if (t.empty()) {
      continue;
    }

    if (t[0] == "vertices") {
      if (have_vertices) {
        fail("vertices declared twice");
      }
      have_vertices = true;
      for (std::size_t k = 1; k < t.size(); ++k) {
        raw.vertices.push_back(to_number<VertexId>(t[k], fail));
      }
    } else if (t[0] == "edge") {
      if (t.size() != 3) {
        fail("expected 'edge <id> <id>'");
      }
      raw.edges.emplace_back(to_number<VertexId>(t[1], fail),
                             to_number<VertexId>(t[2], fail));
    } else if (t[0] == "group") {
      if (t.size() < 3) {
        fail("expected 'group <id> <directive> ...'");
      }
      auto const id = to_number<VertexId>(t[1], fail);
      auto [it, fresh] = slot.emplace(id, raw.groups.size());
      if (fresh) {
        raw.groups.push_back(RawGroup{});
        raw.groups.back().vertex = id;
      }
      RawGroup& g = raw.groups[it->second];
      std::string const& what = t[2];
      if (what == "gens") {
        g.gens.insert(g.gens.end(), t.begin() + 3, t.end());
      } else if (what == "bar") {
        if (t.size() != 5) {
          fail("expected 'group <id> bar <letter> <letter>'");
        }
        g.bars.emplace_back(t[3], t[4]);
      } else if (what == "rel") {
        if (t.size() < 4) {
          fail("empty relator");
        }
        g.relators.emplace_back(t.begin() + 3, t.end());
      } else if (what == "iso") {
        if (g.iso) {
          fail("iso class declared twice");
        }
        if (t.size() == 5 && t[3] == "poly") {
          g.iso = FunctionClass::polynomial(to_number<unsigned>(t[4], fail));
        } else if (t.size() == 4 && t[3] == "exp") {
          g.iso = FunctionClass::exponential();
        } else if (t.size() >= 5 && t[3] == "table") {
          std::vector<Count> values;
          for (std::size_t k = 4; k < t.size(); ++k) {
            values.push_back(to_number<Count>(t[k], fail));
          }
          g.iso = FunctionClass::tabulated(std::move(values));
        } else {
          fail("expected 'iso poly <k>', 'iso exp' or 'iso table <v1> ...'");
        }
      } else if (what == "backend") {
        if (g.backend) {
          fail("backend declared twice");
        }
        if (t.size() < 4) {
          fail("expected a backend kind");
        }
        RawBackend b;
        if (t[3] == "free" && t.size() == 4) {
          b.kind = BackendKind::FreeGroup;
        } else if (t[3] == "abelian" && t.size() == 4) {
          b.kind = BackendKind::FreeAbelian;
        } else if (t[3] == "table" && t.size() >= 5) {
          b.kind = BackendKind::FiniteTable;
          b.order = to_number<std::size_t>(t[4], fail);
          std::size_t k = 5;
          for (; k < t.size() && t[k] != "map"; ++k) {
            b.entries.push_back(to_number<std::size_t>(t[k], fail));
          }
          if (k == t.size()) {
            fail("table backend needs 'map <letter>=<elem>...'");
          }
          for (++k; k < t.size(); ++k) {
            auto eq = t[k].find('=');
            if (eq == std::string::npos || eq == 0) {
              fail("expected <letter>=<elem>, got '" + t[k] + "'");
            }
            b.map.emplace_back(t[k].substr(0, eq),
                               to_number<std::size_t>(t[k].substr(eq + 1), fail));
          }
        } else {
          fail("expected 'backend free', 'backend abelian' or 'backend table ...'");
        }
        g.backend = std::move(b);
      } else {
        fail("unknown group directive '" + what + "'");
      }
    } else {
      fail("unknown directive '" + t[0] + "'");
    }
  }
  if (!have_vertices) {
    throw Error(Errc::Parse, "no 'vertices' line");
  }
  return raw;
}

namespace {

struct Loaded {
  explicit Loaded(std::string const& path)
      : p(validate_presentation(parse_input(read_file(path)))), oracles(p) {}
  GraphProductPresentation p;
  OracleSet oracles;
};

void print_reports(Loaded const& ctx, std::vector<CheckReport> const& reports,
                   std::ostream& out, int& status) {
  for (auto const& r : reports) {
    out << render_report(ctx.p, r);
    if (r.failures() > 0) {
      status = kFalse;
    }
  }
}

}  // namespace

int run_command(std::vector<std::string> const& args, std::istream& in,
                std::ostream& out, std::ostream& err) {
  CLI::App app{"Word problem, Dehn certificates and Thue-system checks for graph products"};
  app.name("gp");
  app.require_subcommand(1);

  std::string file;
  std::string word;
  bool trace = false;
  std::string out_path;
  std::string cert_path;
  std::size_t max_norm = 0;
  std::size_t max_syll = 0;
  std::optional<std::size_t> budget;
  Count n = 0;

  auto* validate = app.add_subcommand("validate", "Validate a presentation");
  auto* solve = app.add_subcommand("solve", "Decide whether a word is the identity");
  auto* reduce_cmd = app.add_subcommand("reduce", "Print the canonical reduction sequence");
  auto* cert = app.add_subcommand("cert", "Emit a Dehn-area certificate");
  auto* verify = app.add_subcommand("verify", "Verify a certificate file");
  auto* confluence = app.add_subcommand("confluence", "Bounded almost-confluence check");
  auto* huet = app.add_subcommand("huet", "Bounded check of the critical-pair criterion");
  auto* cases = app.add_subcommand("cases", "Check the six critical-case resolutions");
  auto* isobound = app.add_subcommand("isobound", "Evaluate f, g and g(n) + n^2");

  for (auto* sub : {validate, solve, reduce_cmd, cert, verify, confluence, huet, cases, isobound}) {
    sub->add_option("file", file, "Presentation file")->required();
  }
  for (auto* sub : {solve, reduce_cmd, cert}) {
    sub->add_option("--word", word, "Space-separated letters")->required();
  }
  reduce_cmd->add_flag("--trace", trace, "Print one line per move");
  cert->add_option("-o", out_path, "Write the certificate to this file");
  verify->add_option("--cert", cert_path, "Certificate file, or - for stdin")->required();
  for (auto* sub : {confluence, huet, cases}) {
    sub->add_option("--max-norm", max_norm, "Universe norm cap L")->required();
    sub->add_option("--max-syll", max_syll, "Universe syllable length cap")->required();
  }
  for (auto* sub : {confluence, huet}) {
    sub->add_option("--budget", budget, "Check words of norm <= t (default L/2)");
  }
  isobound->add_option("-n", n, "Argument")->required();

  std::vector<std::string> argv_store{"gp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char const*> argv;
  for (auto const& a : argv_store) {
    argv.push_back(a.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    Loaded const ctx(file);
    auto const& p = ctx.p;

    if (validate->parsed()) {
      out << "valid: true\n";
      out << "vertices:";
      for (auto i : p.graph().vertices()) {
        out << ' ' << i;
      }
      out << "\nedges:";
      for (auto [i, j] : p.graph().edges()) {
        out << ' ' << i << '-' << j;
      }
      out << "\nf: " << p.f().describe() << '\n';
      auto const& rels = p.combined_relators();
      for (std::size_t k = 0; k < rels.size(); ++k) {
        out << "relator " << k << ": " << p.render(rels[k]) << '\n';
      }
      return kOk;
    }

    if (solve->parsed()) {
      bool const id = is_identity_in_product(ctx.oracles, p.parse_letters(word));
      out << "identity: " << (id ? "true" : "false") << '\n';
      return id ? kOk : kFalse;
    }

    if (reduce_cmd->parsed()) {
      auto const w = alpha(p, p.parse_letters(word));
      auto const seq = reduce(ctx.oracles, w);
      if (!seq) {
        out << "identity: false\n";
        return kFalse;
      }
      out << "identity: true\n";
      if (trace) {
        out << render_trace(p, *seq);
      }
      std::size_t const nw = norm(w);
      out << "norm: " << nw << '\n';
      out << "weight: " << weight_of_sequence(ctx.oracles, *seq, p.f()) << '\n';
      out << "bound: " << iso_bound(p.f(), nw) << '\n';
      return kOk;
    }

    if (cert->parsed()) {
      auto const w = p.parse_letters(word);
      auto const c = certify(ctx.oracles, w);
      if (!c) {
        out << "identity: false\n";
        return kFalse;
      }
      std::string const text = write_certificate(p, *c);
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) {
          throw Error(Errc::Parse, "cannot write '" + out_path + "'");
        }
        os << text;
        out << "items: " << c->items.size() << '\n';
        out << "bound: " << iso_bound(p.f(), w.size()) << '\n';
      }
      return kOk;
    }

    if (verify->parsed()) {
      std::string text;
      if (cert_path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      } else {
        text = read_file(cert_path);
      }
      auto const c = read_certificate(p, text);
      bool const ok = verify_certificate(p, c);
      out << "verified: " << (ok ? "true" : "false") << '\n';
      out << "items: " << c.items.size() << '\n';
      return ok ? kOk : kFalse;
    }

    if (confluence->parsed() || huet->parsed()) {
      BoundedUniverse const u(ctx.oracles, max_norm, max_syll);
      std::size_t const t = budget.value_or(max_norm / 2);
      auto const report = confluence->parsed() ? check_almost_confluence(u, t)
                                               : check_huet_criterion(u, t);
      int status = kOk;
      print_reports(ctx, {report}, out, status);
      return status;
    }

    if (cases->parsed()) {
      BoundedUniverse const u(ctx.oracles, max_norm, max_syll);
      int status = kOk;
      print_reports(ctx, verify_critical_cases(u), out, status);
      return status;
    }

    if (isobound->parsed()) {
      out << "f: " << p.f().describe() << '\n';
      out << "g: " << g_of(p.f(), n) << '\n';
      out << "bound: " << iso_bound(p.f(), n) << '\n';
      return kOk;
    }
  } catch (Error const& e) {
    err << "gp: " << e.what() << '\n';
    return e.code() == Errc::AreaCapExceeded ? kCapExceeded : kInputError;
  } catch (std::exception const& e) {
    err << "gp: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace gp::cli
