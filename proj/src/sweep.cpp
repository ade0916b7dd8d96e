#include "shapovalov/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <thread>

namespace shapovalov {

bool SweepReport::all_passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.passed(); });
}

std::size_t SweepReport::count(const std::string& status) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [&](const SweepRow& r) { return r.status == status; }));
}

namespace {

struct Task {
    std::size_t type;
    Root beta;
    std::optional<int> alpha;
    int m = 0;
    std::uint64_t cost = 0;
    std::vector<SweepRow> rows;
};

std::vector<SweepRow> run_task(const SweepConfig& cfg, NegativeAlgebra& alg, const Task& task) {
    const RootSystem& rs = alg.root_system();
    SweepRow base;
    base.type = rs.name();
    base.beta = task.beta;
    base.alpha = task.alpha;
    base.m = task.m;
    if (!task.alpha) {
        base.status = "skipped: inadmissible";
        base.note = "no simple α in the support satisfies ℓ(α,β)(α,α) = (β,β)";
        return {base};
    }

    const auto pair = make_admissible_pair(rs, task.beta, *task.alpha);
    const auto theta = theta_one(alg, pair);
    std::vector<AffineForm> avoid;
    for (const auto& f : shifted_ledger(rs, theta, task.m)) avoid.push_back(f.form);
    if (pair.plain_power)
        for (int k = 1; k < task.m; ++k)
            for (const auto& f : theta.ledger) avoid.push_back(f.form.shifted(-(Rational(k) * rs.to_weight(task.beta))));
    std::optional<ShapovalovElement> universal;
    if (cfg.universal) universal = theta_universal(alg, theta, task.m);

    std::vector<SweepRow> rows;
    for (int s = 0; s < cfg.samples; ++s) {
        SweepRow row = base;
        row.sample = s;
        Sample sample;
        try {
            sample = sample_kac_kazhdan(rs, task.beta, task.m, cfg.seed, static_cast<std::uint64_t>(s), avoid);
        } catch (const SamplingError& e) {
            row.status = "sampling exhausted";
            row.note = e.what();
            rows.push_back(row);
            continue;
        }
        row.lambda = sample.lambda;
        auto numeric = theta_numeric(alg, theta, task.m, sample.lambda);
        if (auto* pole = std::get_if<Pole>(&numeric)) {
            row.status = "fail";
            row.note = "pole at " + to_string(pole->factor);
            rows.push_back(row);
            continue;
        }
        const auto& v = std::get<NumericElement>(numeric);
        row.terms = v.size();
        row.extremal = verify_extremal(alg, v, sample.lambda).extremal;
        bool ok = row.extremal;

        if (cfg.oracle) {
            const auto kernel = singular_vector_solve(alg, sample.lambda, task.m * task.beta);
            row.kernel_dim = kernel.size();
            if (!v.is_zero()) {
                if (kernel.size() == 1)
                    row.oracle_match = proportional(v, kernel.front()).has_value();
                else
                    row.oracle_match = !kernel.empty() && in_span(v, kernel);
            }
            ok = ok && row.oracle_match;
        }
        if (universal) {
            auto ev = evaluate(universal->element, sample.lambda);
            bool match = false;
            if (auto* u = std::get_if<NumericElement>(&ev); u && !(u->is_zero() && v.is_zero()))
                match = proportional(*u, v).has_value();
            else if (auto* pole = std::get_if<Pole>(&ev))
                row.note = "universal pole at " + to_string(pole->factor);
            row.universal_match = match;
            ok = ok && match;
        }
        if (pair.plain_power) {
            auto pp = theta_plain_power(alg, theta, task.m, sample.lambda);
            bool match = false;
            if (auto* u = std::get_if<NumericElement>(&pp); u && !(u->is_zero() && v.is_zero()))
                match = proportional(*u, v).has_value();
            row.plain_power_match = match;
            ok = ok && match;
        }
        row.status = ok ? "ok" : "fail";
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

SweepReport run_sweep(const SweepConfig& config) {
    std::vector<std::unique_ptr<StructureTable>> tables;
    std::vector<Task> tasks;
    for (const auto& name : config.types) {
        tables.push_back(std::make_unique<StructureTable>(StructureTable::build(RootSystem::parse(name))));
        const RootSystem& rs = tables.back()->root_system();
        const std::size_t t = tables.size() - 1;
        for (const Root& beta : rs.positive_roots()) {
            if (beta.height() < 2) continue;
            const auto alphas = admissible_alphas(rs, beta);
            if (alphas.empty()) {
                tasks.push_back({t, beta, std::nullopt, 0, 0, {}});
                continue;
            }
            for (int a : alphas)
                for (int m = 1; m <= config.m_max; ++m) {
                    const std::uint64_t cost = kostant_count(rs, m * beta);
                    tasks.push_back({t, beta, a, m, cost, {}});
                }
        }
    }

    // expensive tasks first; results land in their canonical slot
    std::vector<std::size_t> schedule(tasks.size());
    for (std::size_t i = 0; i < schedule.size(); ++i) schedule[i] = i;
    std::stable_sort(schedule.begin(), schedule.end(),
                     [&](std::size_t a, std::size_t b) { return tasks[a].cost > tasks[b].cost; });

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        std::map<std::size_t, std::unique_ptr<NegativeAlgebra>> algebras;
        for (std::size_t k; (k = next.fetch_add(1)) < schedule.size();) {
            Task& task = tasks[schedule[k]];
            auto& alg = algebras[task.type];
            if (!alg) alg = std::make_unique<NegativeAlgebra>(*tables[task.type]);
            task.rows = run_task(config, *alg, task);
        }
    };
    const unsigned jobs = std::max(1u, config.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SweepReport report{config, {}};
    for (auto& task : tasks)
        for (auto& row : task.rows) report.rows.push_back(std::move(row));
    return report;
}

Json to_json(const SweepRow& row) {
    Json j;
    j["type"] = row.type;
    j["beta"] = to_json(row.beta);
    j["alpha"] = row.alpha ? Json(*row.alpha + 1) : Json(nullptr);
    j["m"] = row.m;
    j["sample"] = row.sample;
    j["lambda"] = row.lambda ? to_json(*row.lambda) : Json(nullptr);
    j["status"] = row.status;
    j["extremal"] = row.extremal;
    j["oracle_match"] = row.oracle_match;
    j["kernel_dim"] = row.kernel_dim;
    j["universal_match"] = row.universal_match ? Json(*row.universal_match) : Json(nullptr);
    j["plain_power_match"] = row.plain_power_match ? Json(*row.plain_power_match) : Json(nullptr);
    j["terms"] = row.terms;
    if (!row.note.empty()) j["note"] = row.note;
    return j;
}

Json to_json(const SweepReport& report) {
    Json rows = Json::array();
    for (const auto& r : report.rows) rows.push_back(to_json(r));
    return {{"schema", kSchema},
            {"types", report.config.types},
            {"m_max", report.config.m_max},
            {"samples", report.config.samples},
            {"seed", report.config.seed},
            {"passed", report.all_passed()},
            {"rows", rows}};
}

}  // namespace shapovalov
