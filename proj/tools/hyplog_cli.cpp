// Command-line front end: run spectrum computations, polarization, property
// verifiers, and the radial oracle, emitting JSON reports and CSV plot data.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyplog/experiments.hpp"

namespace {

using namespace hyplog;

DomainSpec load_domain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--domain", "cannot open " + path);
  nlohmann::json j;
  in >> j;
  return DomainSpec::from_json(j);
}

Geodesic parse_geodesic(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  try {
    if (parts.size() == 2 && parts[0] == "diam")
      return Geodesic::diameter(std::stod(parts[1]));
    if (parts.size() == 3 && parts[0] == "arc")
      return Geodesic::arc(std::stod(parts[1]), std::stod(parts[2]));
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("--geodesic",
                             "expected diam:<theta> or arc:<theta>:<a>");
}

Side parse_side(const std::string& text) {
  if (text == "pos") return Side::Positive;
  if (text == "neg") return Side::Negative;
  throw CLI::ValidationError("--side", "expected pos or neg");
}

PointD parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--z", "expected x,y");
  return PointD(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
}

void emit_report(const Report& report, const std::string& manifest) {
  const std::string line = report.to_json().dump();
  std::cout << line << "\n";
  if (!manifest.empty()) {
    std::ofstream out(manifest, std::ios::app);
    if (!out) throw std::runtime_error("cannot open manifest " + manifest);
    out << line << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic logarithmic potential toolkit"};
  app.require_subcommand(0, 1);

  std::string domain_path, geodesic_text = "diam:0", side_text = "pos";
  std::string manifest, csv_path, z_text = "0,0";
  double pitch = 0.02, oracle_radius = 0.5, circle_radius = 0.1;
  int count = 8, trials = 100;
  std::uint64_t seed = 1;
  std::vector<int> oracle_sizes{128, 256, 512};
  std::vector<double> pitches{0.04, 0.02};
  std::vector<double> radii{0.7, 0.9, 0.99, 0.999};

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Leading eigenvalues of a domain");
  spectrum_cmd->add_option("--domain", domain_path, "DomainSpec JSON file")->required();
  spectrum_cmd->add_option("--pitch", pitch, "grid pitch")->check(CLI::Range(1e-4, 0.2));
  spectrum_cmd->add_option("--count", count, "number of eigenvalues to print");

  auto* polarize_cmd = app.add_subcommand("polarize", "Emit the polarized domain mask");
  polarize_cmd->add_option("--domain", domain_path)->required();
  polarize_cmd->add_option("--geodesic", geodesic_text, "diam:<theta> or arc:<theta>:<a>");
  polarize_cmd->add_option("--side", side_text, "pos|neg");
  polarize_cmd->add_option("--pitch", pitch)->check(CLI::Range(1e-4, 0.2));
  polarize_cmd->add_option("--out", csv_path, "CSV output path (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run a property verifier");
  std::string check;
  verify_cmd
      ->add_option("check", check,
                   "fk|riesz|positivity|representation|bound|decay|eigenfunction")
      ->required();
  verify_cmd->add_option("--domain", domain_path)->required();
  verify_cmd->add_option("--geodesic", geodesic_text);
  verify_cmd->add_option("--side", side_text);
  verify_cmd->add_option("--pitch", pitch)->check(CLI::Range(1e-4, 0.2));
  verify_cmd->add_option("--pitches", pitches, "pitch list (positivity)")->check(CLI::Range(1e-4, 0.2));
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--trials", trials, "random fields (bound)");
  verify_cmd->add_option("--z", z_text, "evaluation point x,y (representation)");
  verify_cmd->add_option("--r", circle_radius, "circle radius (representation)");
  verify_cmd->add_option("--radii", radii, "radii list (decay)");
  verify_cmd->add_option("--out", manifest, "append JSON report to this manifest");

  auto* oracle_cmd = app.add_subcommand("oracle", "Radial oracle convergence table");
  oracle_cmd->add_option("--R", oracle_radius, "disk pseudo-hyperbolic radius");
  oracle_cmd->add_option("--n", oracle_sizes, "radial resolutions")->delimiter(',');
  oracle_cmd->add_option("--csv", csv_path, "also write CSV plot data");

  if (argc <= 1) {
    std::cout << app.help();
    return 2;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (spectrum_cmd->parsed()) {
      const DomainSpec spec = load_domain(domain_path);
      const GriddedDomain dom = build_grid(spec, pitch);
      const Spectrum s = eigen_decompose(assemble(dom));
      nlohmann::json out;
      out["pitch"] = pitch;
      out["nodes"] = dom.mask.count();
      out["eigenvalues"] = nlohmann::json::array();
      for (int k = 0; k < std::min<Eigen::Index>(count, s.eigenvalues.size()); ++k)
        out["eigenvalues"].push_back(s.eigenvalues[k]);
      std::cout << out.dump() << "\n";
      return 0;
    }

    if (polarize_cmd->parsed()) {
      const DomainSpec spec = load_domain(domain_path);
      const Polarizer p{parse_geodesic(geodesic_text), parse_side(side_text)};
      const GriddedDomain dom = build_paired_grid(spec, pitch, p);
      const DomainMask polarized = polarize_mask(dom.mask, p);
      std::ostringstream csv;
      csv << "x,y,inside\n";
      for (std::size_t i = 0; i < dom.grid->size(); ++i)
        csv << dom.grid->nodes[i].re << "," << dom.grid->nodes[i].im << ","
            << int(polarized.inside[i]) << "\n";
      if (csv_path.empty()) {
        std::cout << csv.str();
      } else {
        std::ofstream out(csv_path);
        out << csv.str();
      }
      return 0;
    }

    if (oracle_cmd->parsed()) {
      std::cout << "n,tau_h,cauchy_difference\n";
      std::ostringstream csv;
      csv << "x,y,series\n";
      double previous = 0.0;
      for (std::size_t k = 0; k < oracle_sizes.size(); ++k) {
        const double tau = radial_oracle(oracle_radius, oracle_sizes[k]);
        std::cout << oracle_sizes[k] << "," << std::setprecision(15) << tau << ",";
        if (k > 0)
          std::cout << std::abs(tau - previous);
        std::cout << "\n";
        csv << oracle_sizes[k] << "," << std::setprecision(15) << tau << ",oracle\n";
        previous = tau;
      }
      if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        out << csv.str();
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      const DomainSpec spec = load_domain(domain_path);
      Report report;
      if (check == "fk") {
        report = verify_reverse_faber_krahn(
            spec, {parse_geodesic(geodesic_text), parse_side(side_text)}, pitch);
      } else if (check == "riesz") {
        report = verify_riesz(
            spec, {parse_geodesic(geodesic_text), parse_side(side_text)}, pitch, seed);
      } else if (check == "positivity") {
        report = verify_positivity(spec, pitches);
      } else if (check == "representation") {
        report = verify_representation(spec, pitch, parse_point(z_text), circle_radius);
      } else if (check == "bound") {
        report = verify_uniform_bound(spec, trials, pitch, seed);
      } else if (check == "decay") {
        report = verify_boundary_decay(spec, radii, pitch);
      } else if (check == "eigenfunction") {
        report = verify_first_eigenfunction(spec, pitch);
      } else {
        std::cerr << "unknown check: " << check << "\n\n" << app.help();
        return 2;
      }
      report.seed = seed;
      emit_report(report, manifest);
      return report.pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cout << app.help();
  return 2;
}
