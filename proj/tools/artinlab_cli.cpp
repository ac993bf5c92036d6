#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "artinlab/errors.hpp"
#include "artinlab/experiment.hpp"
#include "artinlab/family_compare.hpp"
#include "artinlab/point_count.hpp"
#include "artinlab/primes.hpp"
#include "artinlab/reduction.hpp"

using namespace artinlab;

namespace {

struct Flags {
	std::string config;
	std::string curve;
	std::vector<std::string> points;
	std::optional<u64> modulus;
	std::vector<u64> residues;
	std::optional<u64> xlimit;
	std::string checkpoints;
	std::optional<u64> truncation;
	std::vector<std::string> overrides;
	std::optional<unsigned> workers;
	std::string out;
	std::string format;
	std::optional<u64> probe_budget;
};

void add_flags(CLI::App *cmd, Flags &f)
{
	cmd->add_option("--config", f.config, "JSON configuration file");
	cmd->add_option("--curve", f.curve, "coefficients a,b of y^2 = x^3 + a x + b");
	cmd->add_option("--point", f.points, "rational point x,y (repeatable)");
	cmd->add_option("--modulus", f.modulus, "conductor f of the congruence condition");
	cmd->add_option("--residue", f.residues, "residue class mod f (repeatable)");
	cmd->add_option("--xlimit", f.xlimit, "largest prime scanned");
	cmd->add_option("--checkpoints", f.checkpoints, "comma separated x values");
	cmd->add_option("--truncation", f.truncation, "series truncation y");
	cmd->add_option("--override", f.overrides, "degree override q=degree (repeatable)");
	cmd->add_option("--workers", f.workers, "worker threads");
	cmd->add_option("--out", f.out, "output path");
	cmd->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
	cmd->add_option("--probe-budget", f.probe_budget, "primes sampled per image probe");
}

u64 parse_u64(const std::string &s, const char *what)
{
	try {
		std::size_t pos = 0;
		u64 v = std::stoull(s, &pos);
		if (pos != s.size())
			throw std::invalid_argument(s);
		return v;
	} catch (const std::exception &) {
		throw config_error(std::string("cannot parse ") + what + ": '" + s + "'");
	}
}

ExperimentConfig build_config(const Flags &f, CLI::App *cmd)
{
	ExperimentConfig cfg;
	if (!f.config.empty()) {
		std::ifstream in(f.config);
		if (!in)
			throw config_error("cannot open configuration file " + f.config);
		nlohmann::json j;
		try {
			in >> j;
		} catch (const nlohmann::json::exception &e) {
			throw config_error(std::string("configuration file is not valid JSON: ") + e.what());
		}
		cfg = config_from_json(j);
	}
	if (!f.curve.empty()) {
		auto comma = f.curve.find(',');
		if (comma == std::string::npos)
			throw config_error("--curve expects a,b");
		try {
			cfg.a = std::stoll(f.curve.substr(0, comma));
			cfg.b = std::stoll(f.curve.substr(comma + 1));
		} catch (const std::exception &) {
			throw config_error("--curve expects integers a,b");
		}
	}
	if (cmd->count("--point"))
		cfg.points = f.points;
	if (f.modulus)
		cfg.f = *f.modulus;
	if (cmd->count("--residue"))
		cfg.residues = f.residues;
	if (f.xlimit)
		cfg.x_limit = *f.xlimit;
	if (!f.checkpoints.empty()) {
		cfg.checkpoints.clear();
		std::stringstream ss(f.checkpoints);
		std::string item;
		while (std::getline(ss, item, ','))
			cfg.checkpoints.push_back(parse_u64(item, "checkpoint"));
	}
	if (f.truncation)
		cfg.truncation = *f.truncation;
	for (const auto &o : f.overrides) {
		auto eq = o.find('=');
		if (eq == std::string::npos)
			throw config_error("--override expects q=degree");
		cfg.degree_overrides[parse_u64(o.substr(0, eq), "override prime")] =
		    mpz_class(std::to_string(parse_u64(o.substr(eq + 1), "override degree")));
	}
	if (f.workers)
		cfg.workers = *f.workers;
	if (!f.out.empty())
		cfg.output = f.out;
	if (!f.format.empty())
		cfg.format = f.format;
	if (f.probe_budget)
		cfg.probe_budget = *f.probe_budget;
	return normalize(cfg);
}

void emit(const std::string &text, const std::string &path)
{
	if (path.empty()) {
		std::cout << text;
		return;
	}
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw config_error("cannot write " + path);
	out << text;
}

std::string dump(const nlohmann::json &j) { return j.dump(2) + "\n"; }

int selftest()
{
	int failures = 0;
	auto check = [&](bool ok, const char *name) {
		std::printf("%s %s\n", ok ? "ok  " : "FAIL", name);
		failures += !ok;
	};
	check(sieve_primes({2, 1000000}).size() == 78498, "pi(10^6) = 78498");
	auto E = make_curve(-1, 0);
	auto rc = reduce_curve(E, 5);
	check(count_points(rc).n == 8, "#E(F_5) = 8 for y^2 = x^3 - x");
	auto gs = group_structure(rc, 8);
	check(gs.d1 == 2 && gs.d2 == 4, "E(F_5) = Z/2 x Z/4");
	auto fam = cyclicity_family(GenericImageModel{});
	check(euler_product(fam, 3).center == Rational(235, 288), "Euler factor product at q <= 3");
	check(truncated_series(fam, 3) == Rational(13, 16), "series truncated at 3");
	auto cmp = compare_families(gl2_determinant_instance({2, 3}));
	check(cmp.verdict == CompareVerdict::f_ge_fprime && cmp.inequality_holds(), "family comparison instance");
	double li = log_integral(1e6);
	check(std::abs(li - 78498) / 78498 < 0.005, "li(10^6) close to pi(10^6)");
	auto env = envelope_exponents(ErrorBudget::elliptic_default());
	check(env.x_power == Rational(5, 6) && env.log_power == Rational(2, 3), "envelope exponents 5/6, 2/3");
	std::printf("%s\n", failures ? "selftest FAILED" : "selftest passed");
	return failures ? 1 : 0;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Counts primes where the reduction of an elliptic curve modulo p has a cyclic quotient by the "
	             "reduced points, and compares with predicted densities."};
	app.require_subcommand(1);
	Flags flags;
	auto *count = app.add_subcommand("count", "scan primes and count those with a cyclic quotient");
	auto *predict = app.add_subcommand("predict", "predicted density with certified interval");
	auto *compare = app.add_subcommand("compare", "counts against predictions per checkpoint");
	auto *probe = app.add_subcommand("probe", "test the mod q images for q <= 13");
	auto *self = app.add_subcommand("selftest", "quick internal checks");
	for (auto *cmd : {count, predict, compare, probe})
		add_flags(cmd, flags);

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return 2;
	}

	try {
		if (self->parsed())
			return selftest();
		CLI::App *cmd = count->parsed() ? count : predict->parsed() ? predict : compare->parsed() ? compare : probe;
		const ExperimentConfig cfg = build_config(flags, cmd);
		const bool json = cfg.format == "json";
		if (cmd == count) {
			auto rows = run_count(cfg);
			emit(json ? dump(count_json(cfg, rows)) : count_csv(rows), cfg.output);
		} else if (cmd == predict) {
			nlohmann::json j;
			j["config"] = config_to_json(cfg);
			j["prediction"] = prediction_json(run_predict(cfg));
			emit(dump(j), cfg.output);
		} else if (cmd == compare) {
			auto rep = run_compare(cfg);
			const std::string csv = compare_csv(rep);
			const std::string js = dump(compare_json(cfg, rep));
			if (cfg.output.empty()) {
				std::cout << (json ? js : csv);
			} else {
				std::filesystem::path base(cfg.output);
				base.replace_extension();
				emit(csv, base.string() + ".csv");
				emit(js, base.string() + ".json");
			}
		} else {
			emit(dump(probe_json(run_probe(cfg))), cfg.output);
		}
	} catch (const config_error &e) {
		std::cerr << "configuration error: " << e.what() << "\n";
		return 2;
	} catch (const excluded_prime &e) {
		std::cerr << "configuration error: " << e.what() << "\n";
		return 2;
	} catch (const domain_error &e) {
		std::cerr << "configuration error: " << e.what() << "\n";
		return 2;
	} catch (const capacity_error &e) {
		std::cerr << "capacity error: " << e.what() << "\n";
		return 3;
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 0;
}
