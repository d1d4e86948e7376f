#include "gpcnd/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpcnd/ball.hpp"
#include "gpcnd/config.hpp"
#include "gpcnd/embedding.hpp"
#include "gpcnd/suite.hpp"

namespace gpcnd {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunConfig load_config(const std::string& path,
                      const std::optional<std::uint64_t>& seed_override,
                      const std::string& out_override) {
  if (path.empty()) {
    throw std::runtime_error("this command needs --config <file>");
  }
  RunConfig config = parse_config_or_throw(read_file(path));
  if (seed_override) config.suite.seed = *seed_override;
  if (!out_override.empty()) config.out = out_override;
  return config;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Graph products of groups: normal forms, the glued conditionally "
      "negative definite function phi_Gamma = l_r + phi~, and numerical "
      "certification of its properties on Cayley balls.\nDefaults: " +
      describe_defaults()};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed_override;
  bool as_json = false;
  app.add_option("--config", config_path, "JSON configuration file")
      ->envname("GPCND_CONFIG");
  app.add_option("--seed", seed_override, "override the configured PRNG seed");
  app.add_option("--out", out_path, "override the report output path");
  app.add_flag("--json", as_json, "machine-readable output");

  std::string word_text;
  auto* cmd_normalize = app.add_subcommand(
      "normalize", "canonical form and reduced length of a word");
  cmd_normalize->add_option("word", word_text,
                            "word like \"v0:3; v2:x1 x2^-1\"");

  auto* cmd_phi = app.add_subcommand(
      "phi", "reduced length, phi~ and phi_Gamma of a word");
  std::string phi_word_text;
  cmd_phi->add_option("word", phi_word_text, "word (same syntax as normalize)");

  auto* cmd_ball =
      app.add_subcommand("ball", "enumerate the Cayley ball of the config");

  auto* cmd_verify = app.add_subcommand(
      "verify", "run the certification suite; exit 0 iff every check passes");
  bool standard = false;
  cmd_verify->add_flag("--standard", standard,
                       "run the built-in six-instance standard suite instead "
                       "of the --config graph");

  auto* cmd_report =
      app.add_subcommand("report", "re-render a JSON report as a text table");
  std::string report_path;
  cmd_report->add_option("file", report_path, "report JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (cmd_normalize->parsed() || cmd_phi->parsed()) {
      const RunConfig config =
          load_config(config_path, seed_override, out_path);
      const GraphSpec graph = config.graph();
      const std::string& text =
          cmd_normalize->parsed() ? word_text : phi_word_text;
      const NormalForm nf = normalize(graph, parse_word(graph, text));
      if (cmd_normalize->parsed()) {
        if (as_json) {
          json doc = {{"normal_form", format_word(graph, nf)},
                      {"l_r", reduced_length(nf)}};
          out << doc.dump() << "\n";
        } else {
          out << "normal_form: " << format_word(graph, nf) << "\n";
          out << "l_r: " << reduced_length(nf) << "\n";
        }
      } else {
        const double tilde = phi_tilde(graph, nf);
        const double gamma = phi_gamma(graph, nf);
        if (as_json) {
          json doc = {{"l_r", reduced_length(nf)},
                      {"phi_tilde", tilde},
                      {"phi_gamma", gamma}};
          out << doc.dump() << "\n";
        } else {
          out << "l_r: " << reduced_length(nf) << "\n";
          out << "phi_tilde: " << tilde << "\n";
          out << "phi_gamma: " << gamma << "\n";
        }
      }
      return 0;
    }

    if (cmd_ball->parsed()) {
      const RunConfig config =
          load_config(config_path, seed_override, out_path);
      const GraphSpec graph = config.graph();
      const Ball ball =
          enumerate_ball(graph, config.suite.radius, config.suite.cap);
      if (as_json) {
        json doc = {{"radius", ball.radius},
                    {"n_elements", ball.size()},
                    {"truncated", ball.truncated}};
        doc["elements"] = json::array();
        for (std::size_t i = 0; i < ball.size(); ++i) {
          doc["elements"].push_back(
              {{"word", format_word(graph, ball.elements[i])},
               {"length", ball.word_length[i]},
               {"l_r", reduced_length(ball.elements[i])},
               {"phi_gamma", phi_gamma(graph, ball.elements[i])}});
        }
        out << doc.dump(2) << "\n";
      } else {
        out << graph.describe() << "\n";
        out << "ball radius " << ball.radius << ": " << ball.size()
            << " elements" << (ball.truncated ? " (truncated at cap)" : "")
            << "\n";
        const auto spheres = ball.spheres();
        for (std::size_t r = 0; r < spheres.size(); ++r) {
          out << "  sphere " << r << ": " << spheres[r].size() << " elements\n";
        }
      }
      return 0;
    }

    if (cmd_verify->parsed()) {
      std::vector<std::pair<std::string, RunConfig>> runs;
      if (standard) {
        runs = standard_suite();
        for (auto& [name, config] : runs) {
          if (seed_override) config.suite.seed = *seed_override;
        }
      } else {
        runs.emplace_back("run",
                          load_config(config_path, seed_override, out_path));
      }

      bool all_pass = true;
      std::vector<std::string> docs;
      for (const auto& [name, config] : runs) {
        const SuiteResult result = run_suite(config, name);
        all_pass = all_pass && result.all_pass();
        out << report_table(result);
        docs.push_back(report_to_json(result));
        if (as_json) out << docs.back() << "\n";
      }

      std::string target = out_path;
      if (!standard && target.empty()) target = runs.front().second.out;
      if (!target.empty()) {
        if (docs.size() == 1) {
          write_text_file(target, docs.front() + "\n");
        } else {
          std::string array = "[\n";
          for (std::size_t i = 0; i < docs.size(); ++i) {
            array += docs[i];
            if (i + 1 < docs.size()) array += ",";
            array += "\n";
          }
          array += "]\n";
          write_text_file(target, array);
        }
        out << "report written to " << target << "\n";
      }
      return all_pass ? 0 : 1;
    }

    if (cmd_report->parsed()) {
      const std::string text = read_file(report_path);
      const json doc = json::parse(text);
      if (doc.is_array()) {
        for (const auto& entry : doc) {
          out << report_table_from_json(entry.dump());
        }
      } else {
        out << report_table_from_json(text);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace gpcnd
