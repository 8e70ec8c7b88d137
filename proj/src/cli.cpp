#include "tc/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tc/catalog.hpp"
#include "tc/ringfile.hpp"

namespace tc {

namespace {

struct Printer {
  std::ostream& out;
  bool tsv = false;
  void kv(const std::string& key, const std::string& value) {
    out << key << (tsv ? "\t" : " ") << value << "\n";
  }
  void kv(const std::string& key, int value) {
    kv(key, std::to_string(value));
  }
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out += (i ? sep : "") + parts[i];
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ComputeError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

void print_witness(Printer& p, const Witness& w) {
  p.kv("witness_factors", join(w.factors, ","));
  p.kv("witness_product", w.product.to_string());
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact zero-divisor and cup-length bounds for topological "
               "complexity"};
  app.require_subcommand(1);

  std::string format = "text";
  bool serial = false;
  std::size_t max_basis = RingLimits{}.max_basis;
  int max_k = SearchOptions{}.max_k;
  app.add_option("--format", format, "text or tsv")
      ->check(CLI::IsMember({"text", "tsv"}));
  app.add_flag("--serial", serial, "serial reference kernels");
  app.add_option("--max-basis", max_basis, "basis size cap");
  app.add_option("--max-k", max_k, "product length cap");

  std::string file, coeff_name, entry_name;
  bool want_witness = false, as_manifold = false;

  CLI::App* validate = app.add_subcommand("validate", "parse and validate");
  validate->add_option("file", file)->required();
  validate->add_flag("--manifold", as_manifold, "treat as a manifold file");

  CLI::App* info = app.add_subcommand("info", "basic ring facts");
  info->add_option("file", file)->required();

  CLI::App* zcl = app.add_subcommand(
      "zcl", "nilpotency of the zero-divisor ideal (TC lower bound)");
  zcl->add_option("file", file)->required();
  zcl->add_flag("--witness", want_witness, "print the certificate");

  CLI::App* cup = app.add_subcommand(
      "cuplength", "nilpotency of the positive ideal (cat lower bound)");
  cup->add_option("file", file)->required();
  cup->add_flag("--witness", want_witness, "print the certificate");

  CLI::App* bound = app.add_subcommand("tc-bound", "both bounds at once");
  bound->add_option("file", file)->required();
  bound->add_option("--coeff", coeff_name, "compute over Z, Q or F_p");

  CLI::App* pd = app.add_subcommand("pd", "pairing nondegeneracy per degree");
  pd->add_option("file", file)->required();

  CLI::App* classify = app.add_subcommand(
      "classify", "low-TC admissibility of a closed orientable manifold");
  classify->add_option("file", file)->required();

  CLI::App* catalog = app.add_subcommand("catalog", "built-in examples");
  catalog->require_subcommand(1);
  CLI::App* cat_list = catalog->add_subcommand("list", "entry names");
  CLI::App* cat_show =
      catalog->add_subcommand("show", "emit an entry as a manifold file");
  cat_show->add_option("name", entry_name)->required();
  CLI::App* cat_check =
      catalog->add_subcommand("check", "recompute all stored expectations");

  for (CLI::App* sub :
       {validate, info, zcl, cup, bound, pd, classify, catalog})
    sub->fallthrough();
  for (CLI::App* sub : {cat_list, cat_show, cat_check}) sub->fallthrough();

  std::vector<const char*> argv{"tctool"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  Printer p{out, format == "tsv"};
  SearchOptions opts;
  opts.max_k = max_k;
  opts.policy = serial ? Exec::Serial : Exec::Parallel;
  opts.limits.max_basis = max_basis;
  ParseOptions popts{opts.limits, opts.policy};

  try {
    if (*validate) {
      const std::string text = read_file(file);
      if (as_manifold) {
        ManifoldData d = parse_manifold_text(text, popts);
        validate_manifold_data(d);
        p.kv("manifold", d.name);
        p.kv("rings", static_cast<int>(d.rings.size()));
      } else {
        RingPtr r = parse_ring_text(text, popts);
        p.kv("ring", r->name());
        p.kv("coeff", r->coeff().to_string());
      }
      p.kv("valid", "true");
      return 0;
    }

    if (*info) {
      RingPtr r = parse_ring_text(read_file(file), popts);
      p.kv("ring", r->name());
      p.kv("coeff", r->coeff().to_string());
      p.kv("dim", r->formal_dim() ? std::to_string(*r->formal_dim()) : "-");
      p.kv("basis_size", r->size());
      p.kv("max_degree", r->max_degree());
      p.kv("table_entries", static_cast<int>(r->table_size()));
      std::string degs;
      for (int i = 0; i < r->size(); ++i)
        degs += (i ? " " : "") + std::to_string(r->degree(i));
      p.kv("degrees", degs);
      return 0;
    }

    if (*zcl) {
      RingPtr r = parse_ring_text(read_file(file), popts);
      SquareRing sq(r, opts.limits, opts.policy);
      NilResult nr = zero_divisor_nilpotency(sq, opts);
      p.kv("ring", r->name());
      p.kv("coeff", r->coeff().to_string());
      p.kv("zcl", nr.nil);
      p.kv("tc_lower_bound", nr.nil);
      if (want_witness) {
        if (!nr.witness) {
          err << "no nonzero product of zero-divisors\n";
          return 1;
        }
        print_witness(p, *nr.witness);
      }
      return 0;
    }

    if (*cup) {
      RingPtr r = parse_ring_text(read_file(file), popts);
      NilResult nr = cuplength_nilpotency(r, opts);
      p.kv("ring", r->name());
      p.kv("coeff", r->coeff().to_string());
      p.kv("cuplength_nil", nr.nil);
      p.kv("cat_lower_bound", nr.nil);
      if (want_witness) {
        if (!nr.witness) {
          err << "no nonzero product of positive-degree classes\n";
          return 1;
        }
        print_witness(p, *nr.witness);
      }
      return 0;
    }

    if (*bound) {
      RingPtr r = parse_ring_text(read_file(file), popts);
      if (!coeff_name.empty()) {
        const CoeffRing target = CoeffRing::from_string(coeff_name);
        if (target != r->coeff()) r = base_change(r, target, opts.policy);
      }
      BoundReport rep = tc_lower_bound(r, opts);
      p.kv("ring", rep.ring_name);
      p.kv("coeff", rep.coeff.to_string());
      p.kv("zcl", rep.zcl);
      p.kv("tc_lower_bound", rep.tc_lower_bound);
      p.kv("cuplength_nil", rep.cup_nil);
      p.kv("cat_lower_bound", rep.cat_lower_bound);
      return 0;
    }

    if (*pd) {
      RingPtr r = parse_ring_text(read_file(file), popts);
      PDReport rep = check_poincare_duality(r);
      p.kv("ring", r->name());
      for (const PDDegree& deg : rep.degrees)
        p.kv("degree_" + std::to_string(deg.k),
             "dim=" + std::to_string(deg.dim_k) +
                 " dual=" + std::to_string(deg.dim_mk) +
                 " rank=" + std::to_string(deg.rank) +
                 (deg.ok ? " ok" : " FAIL"));
      p.kv("duality", rep.ok ? "ok" : "failed");
      return rep.ok ? 0 : 1;
    }

    if (*classify) {
      ManifoldData d = parse_manifold_text(read_file(file), popts);
      Verdict v = classify_low_tc(d, opts);
      p.kv("manifold", d.name);
      p.kv("verdict", verdict_label(v));
      p.kv("tc_floor", v.tc_floor);
      p.kv("reason", v.reason);
      if (v.witness) {
        if (v.witness_coeff)
          p.kv("witness_coeff", v.witness_coeff->to_string());
        print_witness(p, *v.witness);
      }
      return 0;
    }

    if (*catalog) {
      if (*cat_list) {
        for (const CatalogEntry& e : catalog_entries())
          p.kv("entry", e.data.name);
        return 0;
      }
      if (*cat_show) {
        const CatalogEntry* e = find_entry(entry_name);
        if (!e) throw ComputeError("unknown catalog entry '" + entry_name + "'");
        if (!e->source_note.empty()) out << "# " << e->source_note << "\n";
        if (e->known_tc) out << "# known_tc " << *e->known_tc << "\n";
        if (e->known_cat) out << "# known_cat " << *e->known_cat << "\n";
        out << serialize_manifold(e->data);
        return 0;
      }
      if (*cat_check) {
        CatalogCheckResult res = catalog_check(opts);
        for (const CatalogCheckLine& line : res.lines)
          out << (line.pass ? "PASS " : "FAIL ") << line.entry
              << (line.detail.empty() ? "" : " - " + line.detail) << "\n";
        out << (res.all_pass ? "catalog ok" : "catalog FAILED") << "\n";
        return res.all_pass ? 0 : 1;
      }
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "unhandled command\n";
  return 2;
}

}  // namespace tc
