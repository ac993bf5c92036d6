#include "artinlab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "artinlab/errors.hpp"
#include "artinlab/primes.hpp"
#include "artinlab/reduction.hpp"

namespace artinlab {

using nlohmann::json;

namespace {

Rational rational_from_json(const json &v, const char *what)
{
	try {
		if (v.is_string()) {
			Rational r(v.get<std::string>());
			r.canonicalize();
			return r;
		}
		if (v.is_number_integer())
			return Rational(static_cast<long>(v.get<i64>()));
	} catch (const std::invalid_argument &) {
	}
	throw config_error(std::string("expected an integer or \"p/q\" for ") + what);
}

json rational_json(const Rational &r) { return to_fraction_string(r); }

json approx(double v) { return std::stod(format_number(v)); }

const std::vector<u64> probe_primes{2, 3, 5, 7, 11, 13};

} // namespace

std::string format_number(double v)
{
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.12g", v);
	return buf;
}

ExperimentConfig config_from_json(const json &j)
{
	ExperimentConfig cfg;
	try {
		if (!j.is_object())
			throw config_error("configuration must be a JSON object");
		if (j.contains("curve")) {
			const auto &c = j.at("curve");
			cfg.a = c.value("a", cfg.a);
			cfg.b = c.value("b", cfg.b);
			cfg.points = c.value("points", cfg.points);
			cfg.conductor_support = c.value("conductor_support", cfg.conductor_support);
		}
		if (j.contains("condition")) {
			const auto &c = j.at("condition");
			cfg.f = c.value("f", cfg.f);
			if (c.contains("residues"))
				cfg.residues = c.at("residues").get<std::vector<u64>>();
		}
		cfg.x_limit = j.value("x_limit", cfg.x_limit);
		cfg.checkpoints = j.value("checkpoints", cfg.checkpoints);
		cfg.truncation = j.value("truncation", cfg.truncation);
		if (j.contains("budget")) {
			const auto &b = j.at("budget");
			if (b.contains("alpha"))
				cfg.budget.alpha = rational_from_json(b.at("alpha"), "budget.alpha");
			if (b.contains("beta"))
				cfg.budget.beta = rational_from_json(b.at("beta"), "budget.beta");
			if (b.contains("gamma"))
				cfg.budget.gamma = rational_from_json(b.at("gamma"), "budget.gamma");
			if (b.contains("aux")) {
				cfg.budget.aux.clear();
				for (const auto &p : b.at("aux")) {
					if (!p.is_array() || p.size() != 2)
						throw config_error("budget.aux entries must be [alpha_i, beta_i]");
					cfg.budget.aux.emplace_back(rational_from_json(p[0], "budget.aux"),
					                            rational_from_json(p[1], "budget.aux"));
				}
			}
		}
		if (j.contains("degree_overrides")) {
			for (const auto &[key, val] : j.at("degree_overrides").items()) {
				u64 q = std::stoull(key);
				Rational d = rational_from_json(val, "degree_overrides");
				if (d.get_den() != 1)
					throw config_error("degree overrides must be integers");
				cfg.degree_overrides[q] = d.get_num();
			}
		}
		cfg.workers = j.value("workers", cfg.workers);
		cfg.output = j.value("output", cfg.output);
		cfg.format = j.value("format", cfg.format);
		cfg.probe_budget = j.value("probe_budget", cfg.probe_budget);
	} catch (const json::exception &e) {
		throw config_error(std::string("bad configuration: ") + e.what());
	} catch (const std::logic_error &e) {
		if (dynamic_cast<const domain_error *>(&e))
			throw;
		throw config_error(std::string("bad configuration value: ") + e.what());
	}
	return cfg;
}

json config_to_json(const ExperimentConfig &cfg)
{
	json j;
	j["curve"] = {{"a", cfg.a}, {"b", cfg.b}, {"points", cfg.points}, {"conductor_support", cfg.conductor_support}};
	j["condition"] = {{"f", cfg.f}};
	if (cfg.residues)
		j["condition"]["residues"] = *cfg.residues;
	j["x_limit"] = cfg.x_limit;
	j["checkpoints"] = cfg.checkpoints;
	j["truncation"] = cfg.truncation;
	json aux = json::array();
	for (const auto &[ai, bi] : cfg.budget.aux)
		aux.push_back({to_string(ai), to_string(bi)});
	j["budget"] = {{"alpha", to_string(cfg.budget.alpha)},
	               {"beta", to_string(cfg.budget.beta)},
	               {"gamma", to_string(cfg.budget.gamma)},
	               {"aux", aux}};
	json ov = json::object();
	for (const auto &[q, d] : cfg.degree_overrides)
		ov[std::to_string(q)] = d.get_str();
	j["degree_overrides"] = ov;
	j["probe_budget"] = cfg.probe_budget;
	return j;
}

ExperimentConfig normalize(ExperimentConfig cfg)
{
	if (cfg.f < 1)
		throw config_error("modulus f must be >= 1");
	if (cfg.truncation < 1)
		throw config_error("truncation y must be >= 1");
	if (cfg.workers < 1)
		throw config_error("workers must be >= 1");
	if (cfg.x_limit < 2)
		throw config_error("x_limit must be >= 2");
	if (cfg.format != "csv" && cfg.format != "json")
		throw config_error("format must be csv or json");
	try {
		cfg.budget.validate();
	} catch (const domain_error &e) {
		throw config_error(e.what());
	}
	build_condition(cfg);
	build_model(cfg).validate();
	if (cfg.checkpoints.empty()) {
		for (u64 x = 10; x <= cfg.x_limit; x *= 10) {
			cfg.checkpoints.push_back(x);
			if (x > cfg.x_limit / 10)
				break;
		}
		cfg.checkpoints.push_back(cfg.x_limit);
	}
	std::sort(cfg.checkpoints.begin(), cfg.checkpoints.end());
	cfg.checkpoints.erase(std::unique(cfg.checkpoints.begin(), cfg.checkpoints.end()), cfg.checkpoints.end());
	if (cfg.checkpoints.front() < 2 || cfg.checkpoints.back() > cfg.x_limit)
		throw config_error("checkpoints must lie in [2, x_limit]");
	return cfg;
}

CurveSpec build_curve(const ExperimentConfig &cfg)
{
	std::vector<RationalPoint> pts;
	for (const auto &s : cfg.points)
		pts.push_back(parse_point(s));
	return make_curve(cfg.a, cfg.b, std::move(pts), cfg.conductor_support);
}

CongruenceCondition build_condition(const ExperimentConfig &cfg)
{
	if (cfg.residues)
		return CongruenceCondition::make(cfg.f, *cfg.residues);
	if (cfg.f == 1)
		return CongruenceCondition::none();
	return CongruenceCondition::make(cfg.f, {}).complement();
}

GenericImageModel build_model(const ExperimentConfig &cfg)
{
	GenericImageModel m;
	m.g = static_cast<int>(cfg.points.size());
	m.degree_overrides = cfg.degree_overrides;
	return m;
}

std::vector<CountRow> run_count(const ExperimentConfig &raw)
{
	const ExperimentConfig cfg = normalize(raw);
	const CurveSpec curve = build_curve(cfg);
	const CongruenceCondition cond = build_condition(cfg);
	const auto &cps = cfg.checkpoints;
	const u64 top = cps.back();
	if (top > SieveOptions{}.max_hi)
		throw capacity_error("x_limit exceeds the sieve capacity");

	const u64 bucket = u64(1) << 17;
	const u64 nbuckets = top / bucket + 1;
	struct Tally {
		std::vector<u64> count, excluded;
	};
	std::vector<Tally> tallies(nbuckets, Tally{std::vector<u64>(cps.size()), std::vector<u64>(cps.size())});

	std::atomic<u64> next{0};
	std::exception_ptr failure;
	std::mutex failure_mutex;
	auto worker = [&] {
		try {
			for (u64 b = next++; b < nbuckets; b = next++) {
				const u64 lo = std::max<u64>(2, b * bucket);
				const u64 hi = std::min(top, (b + 1) * bucket - 1);
				if (lo > hi)
					continue;
				auto &t = tallies[b];
				for_each_prime({lo, hi}, [&](u64 p) {
					const std::size_t slot = std::lower_bound(cps.begin(), cps.end(), p) - cps.begin();
					if (is_excluded(curve, p, cond.f)) {
						++t.excluded[slot];
						return;
					}
					if (!cond.contains(p))
						return;
					auto rec = make_record(curve, p, cond.f);
					if (rec && is_primitive_cyclic(*rec))
						++t.count[slot];
				});
			}
		} catch (...) {
			std::lock_guard<std::mutex> lock(failure_mutex);
			if (!failure)
				failure = std::current_exception();
			next = nbuckets;
		}
	};
	const unsigned n = std::max(1u, cfg.workers);
	std::vector<std::thread> threads;
	for (unsigned i = 1; i < n; ++i)
		threads.emplace_back(worker);
	worker();
	for (auto &th : threads)
		th.join();
	if (failure)
		std::rethrow_exception(failure);

	std::vector<CountRow> rows(cps.size());
	u64 c = 0, e = 0;
	for (std::size_t s = 0; s < cps.size(); ++s) {
		for (const auto &t : tallies) {
			c += t.count[s];
			e += t.excluded[s];
		}
		rows[s] = {cps[s], c, e};
	}
	return rows;
}

Prediction run_predict(const ExperimentConfig &raw, bool probe)
{
	const ExperimentConfig cfg = normalize(raw);
	const GenericImageModel model = build_model(cfg);
	const CongruenceCondition cond = build_condition(cfg);
	const FamilyDescriptor fam = cyclicity_family(model, cond);

	Prediction out;
	out.family = fam.name;
	out.interval = density_with_interval(fam, cfg.truncation);
	std::map<u64, bool> empty_sets;
	for (const auto &[q, d] : model.degree_overrides)
		empty_sets[q] = d == 1;
	if (cond.residues.empty()) {
		out.interval.center = 0;
		out.interval.tail = 0;
		out.interval.certified = true;
		out.positivity.kind = PositivityKind::zero;
		out.positivity.reason = "C_F is empty";
	} else {
		out.positivity = positivity_check(fam, empty_sets);
	}

	out.caveats.push_back("error envelope uses constant 1; trend comparison only");
	if (!model.degree_overrides.empty())
		out.caveats.push_back("degree overrides are per prime; cross-prime entanglement is not modelled");
	if (!model.degree_overrides.empty() && cond.f > 1)
		out.caveats.push_back("overrides combined with a congruence condition assume entanglement with Q(zeta_f) "
		                      "only through the determinant");
	if (probe) {
		out.probes = image_probe_all(build_curve(cfg), probe_primes, cfg.probe_budget);
		for (const auto &r : out.probes) {
			if (r.verdict == ProbeVerdict::non_surjective && !model.degree_overrides.count(r.q))
				out.caveats.push_back("image probe: mod " + std::to_string(r.q) +
				                      " image looks non-surjective; the generic model is likely wrong here, "
				                      "consider a degree override");
			else if (r.verdict == ProbeVerdict::non_surjective)
				out.caveats.push_back("image probe: mod " + std::to_string(r.q) +
				                      " image non-surjective; prediction relies on the supplied override");
			else if (r.verdict == ProbeVerdict::insufficient_samples)
				out.caveats.push_back("image probe: not enough primes for q = " + std::to_string(r.q));
		}
	}
	return out;
}

CompareReport run_compare(const ExperimentConfig &raw)
{
	const ExperimentConfig cfg = normalize(raw);
	CompareReport rep;
	rep.prediction = run_predict(cfg);
	const auto &iv = rep.prediction.interval;
	const double c = iv.center.get_d();
	const double lo = iv.lo().get_d();
	const double hi = iv.hi().get_d();
	for (const auto &r : run_count(cfg)) {
		CompareRow row;
		row.counts = r;
		row.li = log_integral(static_cast<double>(r.x));
		row.center = c * row.li;
		row.lo = lo * row.li;
		row.hi = hi * row.li;
		if (iv.center > 0)
			row.ratio = static_cast<double>(r.count) / row.center;
		row.envelope = error_envelope(static_cast<double>(r.x), cfg.budget);
		rep.rows.push_back(row);
	}
	return rep;
}

std::vector<ProbeResult> run_probe(const ExperimentConfig &raw)
{
	const ExperimentConfig cfg = normalize(raw);
	return image_probe_all(build_curve(cfg), probe_primes, cfg.probe_budget);
}

std::string count_csv(const std::vector<CountRow> &rows)
{
	std::ostringstream os;
	os << "x,count,excluded\n";
	for (const auto &r : rows)
		os << r.x << ',' << r.count << ',' << r.excluded << '\n';
	return os.str();
}

std::string compare_csv(const CompareReport &report)
{
	std::ostringstream os;
	os << "x,count,excluded,li,predicted_center,predicted_lo,predicted_hi,ratio,envelope\n";
	for (const auto &r : report.rows)
		os << r.counts.x << ',' << r.counts.count << ',' << r.counts.excluded << ',' << format_number(r.li) << ','
		   << format_number(r.center) << ',' << format_number(r.lo) << ',' << format_number(r.hi) << ','
		   << (r.ratio ? format_number(*r.ratio) : "NA") << ',' << format_number(r.envelope) << '\n';
	return os.str();
}

json probe_json(const std::vector<ProbeResult> &probes)
{
	json arr = json::array();
	for (const auto &r : probes) {
		json missing = json::array();
		for (auto [t, d] : r.missing)
			missing.push_back({{"trace", t}, {"det", d}});
		arr.push_back({{"q", r.q},
		               {"verdict", to_string(r.verdict)},
		               {"sampled", r.sampled},
		               {"scanned_to", r.scanned_to},
		               {"missing", missing}});
	}
	return arr;
}

json prediction_json(const Prediction &p)
{
	const auto &iv = p.interval;
	json j;
	j["family"] = p.family;
	j["y"] = iv.y;
	j["center"] = rational_json(iv.center);
	j["tail"] = rational_json(iv.tail);
	j["center_approx"] = approx(iv.center.get_d());
	j["tail_approx"] = approx(iv.tail.get_d());
	j["lo_approx"] = approx(iv.lo().get_d());
	j["hi_approx"] = approx(iv.hi().get_d());
	j["tail_certified"] = iv.certified;
	j["positivity"] = {{"verdict", to_string(p.positivity.kind)},
	                   {"lower_bound_approx", approx(p.positivity.lower_bound.get_d())},
	                   {"reason", p.positivity.reason}};
	j["probes"] = probe_json(p.probes);
	j["non_generic_image"] = std::any_of(p.probes.begin(), p.probes.end(), [](const ProbeResult &r) {
		return r.verdict == ProbeVerdict::non_surjective;
	});
	j["caveats"] = p.caveats;
	return j;
}

json count_json(const ExperimentConfig &cfg, const std::vector<CountRow> &rows)
{
	json j;
	j["config"] = config_to_json(normalize(cfg));
	json arr = json::array();
	for (const auto &r : rows)
		arr.push_back({{"x", r.x}, {"count", r.count}, {"excluded", r.excluded}});
	j["rows"] = arr;
	return j;
}

json compare_json(const ExperimentConfig &cfg, const CompareReport &report)
{
	json j;
	j["config"] = config_to_json(normalize(cfg));
	j["prediction"] = prediction_json(report.prediction);
	json arr = json::array();
	for (const auto &r : report.rows) {
		json row = {{"x", r.counts.x},
		            {"count", r.counts.count},
		            {"excluded", r.counts.excluded},
		            {"li", approx(r.li)},
		            {"predicted_center", approx(r.center)},
		            {"predicted_lo", approx(r.lo)},
		            {"predicted_hi", approx(r.hi)},
		            {"envelope", approx(r.envelope)}};
		row["ratio"] = r.ratio ? approx(*r.ratio) : json("NA");
		row["discrepancy"] = approx(std::abs(static_cast<double>(r.counts.count) - r.center));
		arr.push_back(row);
	}
	j["rows"] = arr;
	return j;
}

} // namespace artinlab
