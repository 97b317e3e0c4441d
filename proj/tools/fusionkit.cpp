// fusionkit: validate and analyze fusion rings and modular data.
//
// Exit codes: 0 success, 1 axiom failure, 2 usage or input error,
// 3 theorem violation (an identity that must hold for valid input failed).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "fusionkit/catalog.hpp"
#include "fusionkit/io.hpp"
#include "fusionkit/report.hpp"

namespace fk = fusionkit;

namespace {

struct Input {
  fk::FusionRing ring;
  std::optional<fk::ModularData> modular;
  bool ring_ok = true;  // false when modular data does not yield a ring
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Input load(const std::string& file, const std::string& catalog, const fk::AnalysisOptions& opt) {
  Input in;
  if (!catalog.empty()) {
    if (!file.empty()) throw UsageError("give either an input file or --catalog, not both");
    auto e = fk::catalog_entry(catalog);
    in.ring = e.ring;
    if (e.modular) in.modular = e.modular->with_tolerance(opt.modular_tolerance);
    return in;
  }
  const std::string text = (file.empty() || file == "-") ? fk::read_stream(std::cin) : fk::read_file(file);
  auto doc = fk::parse_document(text);
  if (fk::is_modular_document(doc)) {
    in.modular = fk::modular_from_json(doc, opt.modular_tolerance);
    try {
      in.ring = fk::verlinde_fusion(*in.modular).ring;
    } catch (const fk::NotModularError&) {
      in.ring_ok = false;
    }
  } else {
    in.ring = fk::ring_from_json(doc);
  }
  return in;
}

void write(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + output + "'");
  out << text;
}

std::string render(const fk::Json& body, const std::string& format) {
  return format == "text" ? fk::to_text_string(body) : fk::to_json_string(body);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion rings, gradings, central series and modular data"};
  app.fallthrough();
  app.require_subcommand(1);

  fk::AnalysisOptions opt;
  std::optional<double> tol;
  std::string format = "json";
  std::string output;
  app.add_option("--tol", tol, "numerical tolerance (default 1e-9 for FP dimensions, 1e-8 for modular data)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-iter", opt.max_iterations, "power-iteration cap")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", output, "write the report here instead of standard output");

  std::string file, catalog;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", file, "input JSON file ('-' or omitted: standard input)");
    sub->add_option("--catalog", catalog, "use a built-in catalog entry as input");
  };

  auto* validate = app.add_subcommand("validate", "check the ring or modular-data axioms");
  add_input(validate);
  auto* analyze = app.add_subcommand("analyze", "full analysis report");
  add_input(analyze);
  bool all_catalog = false;
  analyze->add_flag("--all-catalog", all_catalog, "analyze every catalog entry");
  auto* series = app.add_subcommand("series", "upper and lower central series");
  add_input(series);
  auto* modular = app.add_subcommand("modular", "checks on modular data");
  add_input(modular);
  auto* cat = app.add_subcommand("catalog", "built-in examples");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "list catalog entries");
  auto* emit = cat->add_subcommand("emit", "print a catalog entry as an input file");
  std::string emit_name;
  bool emit_modular = false;
  emit->add_option("name", emit_name, "catalog entry")->required();
  emit->add_flag("--modular", emit_modular, "emit the modular data instead of the ring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(fk::Status::usage);
  }

  try {
    if (const char* env = std::getenv("FUSIONKIT_TOL"); env && !tol) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end == env || *end != '\0' || !(v > 0)) throw UsageError("FUSIONKIT_TOL must be a positive number");
      tol = v;
    }
    if (tol) opt.tolerance = opt.modular_tolerance = *tol;

    if (cat->parsed()) {
      if (cat->got_subcommand("list")) {
        fk::Json list = fk::Json::array();
        for (const auto& name : fk::catalog_names()) {
          auto e = fk::catalog_entry(name);
          list.push_back({{"name", name}, {"description", e.description}, {"modular", e.modular.has_value()},
                          {"rank", e.ring.rank()}});
        }
        if (format == "text") {
          std::string out;
          for (const auto& item : list)
            out += item["name"].get<std::string>() + "  " + item["description"].get<std::string>() + "\n";
          write(out, output);
        } else {
          write(fk::to_json_string(list), output);
        }
        return 0;
      }
      auto e = fk::catalog_entry(emit_name);
      if (emit_modular) {
        if (!e.modular) throw UsageError("catalog entry '" + emit_name + "' has no modular data");
        write(fk::to_json_string(fk::to_json(*e.modular)), output);
      } else {
        write(fk::to_json_string(fk::to_json(e.ring)), output);
      }
      return 0;
    }

    if (analyze->parsed() && all_catalog) {
      if (!file.empty() || !catalog.empty()) throw UsageError("--all-catalog takes no other input");
      fk::Report all;
      for (const auto& name : fk::catalog_names()) {
        auto in = load("", name, opt);
        auto rep = fk::analysis_report(in.ring, opt, in.modular ? &*in.modular : nullptr);
        all.body["entries"][name] = rep.body;
        all.fail(rep.status);
      }
      write(render(all.body, format), output);
      return static_cast<int>(all.status);
    }

    auto in = load(file, catalog, opt);
    fk::Report rep;
    if (validate->parsed()) {
      rep = in.modular ? fk::validation_report(*in.modular) : fk::validation_report(in.ring);
    } else if (modular->parsed()) {
      if (!in.modular) throw UsageError("the modular subcommand needs modular data (a file with S and T)");
      rep = fk::modular_report(*in.modular);
    } else if (!in.ring_ok) {
      rep = fk::validation_report(*in.modular);
    } else if (series->parsed()) {
      rep = fk::series_report(in.ring);
    } else {
      rep = fk::analysis_report(in.ring, opt, in.modular ? &*in.modular : nullptr);
    }
    write(render(rep.body, format), output);
    return static_cast<int>(rep.status);
  } catch (const UsageError& e) {
    std::cerr << "fusionkit: " << e.what() << "\n";
  } catch (const fk::SchemaError& e) {
    std::cerr << "fusionkit: schema error: " << e.what() << "\n";
  } catch (const fk::StructuralError& e) {
    std::cerr << "fusionkit: malformed input: " << e.what() << "\n";
  } catch (const fk::PreconditionError& e) {
    std::cerr << "fusionkit: " << e.what() << "\n";
  } catch (const fk::InvariantViolation& e) {
    std::cerr << "fusionkit: theorem violation: " << e.what() << "\n";
    return static_cast<int>(fk::Status::theorem_violation);
  }
  return static_cast<int>(fk::Status::usage);
}
