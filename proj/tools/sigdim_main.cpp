#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "sigdim/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Signaling dimension of finite GPT systems"};
  app.require_subcommand(1);
  sigdim::RunConfig config;
  long m = 0, n = 0, d = 0;

  const std::map<std::string, sigdim::Objective> objectives{{"zeros", sigdim::Objective::Zeros},
                                                            {"ones", sigdim::Objective::Ones}};
  const std::map<std::string, sigdim::SearchOrder> searches{{"linear", sigdim::SearchOrder::Linear},
                                                            {"binary", sigdim::SearchOrder::Binary}};

  auto add = [&](const std::string& name, const std::string& help) { return app.add_subcommand(name, help); };
  auto* model = add("model", "Write a model as GptSystem JSON (squit, C<d>, PR, HS, FROZEN-16..19)");
  model->add_option("--name", config.name)->required();
  model->add_option("--emit,-o", config.output_path);
  auto* classify = add("classify", "List the maximal completely positive two-squit compositions");
  auto* meas = add("measurements", "Enumerate extremal measurements and their orbits");
  meas->add_option("--system", config.system_path)->required();
  meas->add_option("--output,-o", config.output_path);
  auto* vert = add("vertices", "Vertex count of the classical polytope P^{m->n}_d");
  vert->add_option("--m", m)->required();
  vert->add_option("--n", n)->required();
  vert->add_option("--d", d)->required();
  auto* eff = add("effective", "Stream the effective vertices of P_d for a distribution");
  eff->add_option("--input", config.input_path)->required();
  eff->add_option("--d", d)->required();
  eff->add_option("--output,-o", config.output_path);
  auto* dim = add("dimension", "Minimal classical dimension of a distribution");
  dim->add_option("--input", config.input_path)->required();
  dim->add_option("--output,-o", config.output_path);
  auto* sig = add("signaling", "Signaling dimension of a system");
  sig->add_option("--system", config.system_path)->required();
  sig->add_option("--report", config.report_path);
  sig->add_option("--csv", config.csv_path);
  auto* wit = add("witness", "Witness separating a distribution from P_d");
  wit->add_option("--input", config.input_path)->required();
  wit->add_option("--d", d)->required();
  wit->add_option("--vertices", config.vertices_path);
  wit->add_option("--output,-o", config.output_path);

  for (auto* sub : {model, classify, meas, vert, eff, dim, sig, wit}) {
    sub->add_option("--threads", config.threads);
    sub->add_option("--box", config.box);
    sub->add_option("--objective", config.objective)->transform(CLI::CheckedTransformer(objectives));
    sub->add_option("--search", config.search)->transform(CLI::CheckedTransformer(searches));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : sigdim::kInputError;
  }
  config.command = app.get_subcommands().front()->get_name();
  if (vert->parsed()) config.m = m, config.n = n;
  if (vert->parsed() || eff->parsed() || wit->parsed()) config.d = d;
  return sigdim::run(config, std::cout, std::cerr);
}
