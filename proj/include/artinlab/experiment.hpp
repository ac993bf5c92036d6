#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "artinlab/curve.hpp"
#include "artinlab/density.hpp"
#include "artinlab/envelope.hpp"
#include "artinlab/galois_model.hpp"
#include "artinlab/image_probe.hpp"

namespace artinlab {

struct ExperimentConfig {
	i64 a = 1;
	i64 b = 1;
	std::vector<std::string> points; ///< "x,y" strings
	std::vector<u64> conductor_support;
	u64 f = 1;
	/// Residues mod f; unset means every unit.
	std::optional<std::vector<u64>> residues;
	u64 x_limit = 1000000;
	/// Empty means powers of ten up to x_limit, plus x_limit.
	std::vector<u64> checkpoints;
	u64 truncation = 10000;
	ErrorBudget budget;
	std::map<u64, mpz_class> degree_overrides;
	unsigned workers = 1;
	std::string output;
	std::string format = "csv";
	u64 probe_budget = default_probe_budget;
};

/// Reads the JSON configuration layout documented in the README. Throws config_error.
ExperimentConfig config_from_json(const nlohmann::json &j);
nlohmann::json config_to_json(const ExperimentConfig &cfg);

/// Checks invariants and fills default checkpoints. Throws config_error.
ExperimentConfig normalize(ExperimentConfig cfg);

CurveSpec build_curve(const ExperimentConfig &cfg);
CongruenceCondition build_condition(const ExperimentConfig &cfg);
GenericImageModel build_model(const ExperimentConfig &cfg);

struct CountRow {
	u64 x = 0;
	u64 count = 0;    ///< kept primes p <= x: p mod f in the residues and the quotient is cyclic
	u64 excluded = 0; ///< primes p <= x in the excluded set
};

/// Deterministic for a fixed configuration whatever the worker count.
std::vector<CountRow> run_count(const ExperimentConfig &cfg);

struct Prediction {
	std::string family;
	DensityInterval interval;
	PositivityVerdict positivity;
	std::vector<ProbeResult> probes;
	std::vector<std::string> caveats;
};

Prediction run_predict(const ExperimentConfig &cfg, bool probe = true);

struct CompareRow {
	CountRow counts;
	double li = 0;
	double center = 0; ///< predicted center * li(x)
	double lo = 0;
	double hi = 0;
	std::optional<double> ratio; ///< count / (center li(x)); absent when the center is 0
	double envelope = 0;
};

struct CompareReport {
	std::vector<CompareRow> rows;
	Prediction prediction;
};

CompareReport run_compare(const ExperimentConfig &cfg);

/// Image probe for every prime q <= 13.
std::vector<ProbeResult> run_probe(const ExperimentConfig &cfg);

std::string format_number(double v);
std::string count_csv(const std::vector<CountRow> &rows);
std::string compare_csv(const CompareReport &report);
nlohmann::json prediction_json(const Prediction &p);
nlohmann::json probe_json(const std::vector<ProbeResult> &probes);
nlohmann::json count_json(const ExperimentConfig &cfg, const std::vector<CountRow> &rows);
nlohmann::json compare_json(const ExperimentConfig &cfg, const CompareReport &report);

} // namespace artinlab
