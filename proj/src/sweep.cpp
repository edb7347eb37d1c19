#include "xy/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "xy/criticality.hpp"
#include "xy/entanglement.hpp"
#include "xy/parallel.hpp"
#include "xy/teleport.hpp"

namespace xy {

const char* quantity_name(Quantity q) {
    switch (q) {
        case Quantity::Concurrence: return "concurrence";
        case Quantity::Fef: return "fef";
        case Quantity::MaxFidelity: return "max_fidelity";
        case Quantity::EntFidelity: return "ent_fidelity";
        case Quantity::T1: return "t1";
        case Quantity::T2: return "t2";
        case Quantity::PartialFidelity: return "partial_fidelity";
    }
    return "unknown";
}

std::optional<Quantity> quantity_from_name(std::string_view name) {
    for (Quantity q : {Quantity::Concurrence, Quantity::Fef, Quantity::MaxFidelity,
                       Quantity::EntFidelity, Quantity::T1, Quantity::T2,
                       Quantity::PartialFidelity})
        if (name == quantity_name(q)) return q;
    return std::nullopt;
}

std::optional<SweepVariable> variable_from_name(std::string_view name) {
    if (name == "eta") return SweepVariable::Eta;
    if (name == "gamma") return SweepVariable::Gamma;
    if (name == "T" || name == "temp" || name == "temperature") return SweepVariable::Temperature;
    if (name == "xi") return SweepVariable::Xi;
    return std::nullopt;
}

void SweepSpec::validate() const {
    if (steps < 2) throw std::invalid_argument("sweep: steps must be at least 2");
    if (!(std::isfinite(start) && std::isfinite(stop) && start < stop))
        throw std::invalid_argument("sweep: need finite start < stop");
    if (quantities.empty()) throw std::invalid_argument("sweep: no quantities requested");
    for (Quantity q : quantities) {
        if ((q == Quantity::T1 || q == Quantity::T2) && variable == SweepVariable::Temperature)
            throw std::invalid_argument("sweep: critical temperatures cannot be swept over T");
        if (variable == SweepVariable::Xi && q != Quantity::PartialFidelity)
            throw std::invalid_argument("sweep: only partial_fidelity depends on xi");
    }
    if (variable == SweepVariable::Temperature && !(start > 0.0))
        throw std::invalid_argument("sweep: temperature sweep needs start > 0");
    fixed.validate();
    bool thermal = false;
    for (Quantity q : quantities)
        if (q != Quantity::T1 && q != Quantity::T2) thermal = true;
    if (thermal && variable != SweepVariable::Temperature && !(fixed.T > 0.0))
        throw std::invalid_argument("sweep: thermal quantities need T > 0");
    if (!std::isfinite(xi)) throw std::invalid_argument("sweep: xi must be finite");
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
    spec.validate();
    const std::int64_t n = spec.steps;
    const std::int64_t m = static_cast<std::int64_t>(spec.quantities.size());
    std::vector<SweepRecord> records(static_cast<std::size_t>(n * m));
    parallel_for(n, [&](std::int64_t i) {
        const double x =
            spec.start + (spec.stop - spec.start) * static_cast<double>(i) / (spec.steps - 1.0);
        ModelParams p = spec.fixed;
        double xi = spec.xi;
        switch (spec.variable) {
            case SweepVariable::Eta: p.eta = x; break;
            case SweepVariable::Gamma: p.gamma = x; break;
            case SweepVariable::Temperature: p.T = x; break;
            case SweepVariable::Xi: xi = x; break;
        }
        for (std::int64_t j = 0; j < m; ++j) {
            const Quantity q = spec.quantities[static_cast<std::size_t>(j)];
            SweepRecord r;
            r.gamma = p.gamma;
            r.eta = p.eta;
            r.J = p.J;
            r.T = p.T;
            r.quantity = q;
            switch (q) {
                case Quantity::Concurrence: r.value = thermal_concurrence_closed(p); break;
                case Quantity::Fef: r.value = fef_closed(p); break;
                case Quantity::MaxFidelity: r.value = max_fidelity_closed(p); break;
                case Quantity::EntFidelity: r.value = max_ent_fidelity_closed(p); break;
                case Quantity::T1:
                case Quantity::T2: {
                    const CriticalResult c = q == Quantity::T1
                                                 ? t1_critical(p.gamma, p.eta, p.J)
                                                 : t2_critical(p.gamma, p.eta, p.J);
                    r.value = c.value;
                    r.converged = c.converged;
                    r.T = std::numeric_limits<double>::quiet_NaN();
                    break;
                }
                case Quantity::PartialFidelity:
                    r.xi = xi;
                    r.value = partial_output_fidelity_closed(p, xi);
                    break;
            }
            records[static_cast<std::size_t>(i * m + j)] = r;
        }
    });
    return records;
}

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string fmt_opt(const std::optional<double>& x) {
    return fmt(x.value_or(std::numeric_limits<double>::quiet_NaN()));
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    bool any_xi = false;
    bool any_err = false;
    for (const SweepRecord& r : records) {
        any_xi = any_xi || r.xi.has_value();
        any_err = any_err || r.stderr_.has_value();
    }
    out << "gamma,eta,J,T";
    if (any_xi) out << ",xi";
    out << ",quantity,value";
    if (any_err) out << ",stderr";
    out << '\n';
    for (const SweepRecord& r : records) {
        out << fmt(r.gamma) << ',' << fmt(r.eta) << ',' << fmt(r.J) << ',' << fmt(r.T);
        if (any_xi) out << ',' << fmt_opt(r.xi);
        out << ',' << quantity_name(r.quantity) << ',' << fmt_opt(r.value);
        if (any_err) out << ',' << fmt_opt(r.stderr_);
        out << '\n';
    }
}

void write_json(std::ostream& out, const std::vector<SweepRecord>& records) {
    bool any_xi = false;
    bool any_err = false;
    for (const SweepRecord& r : records) {
        any_xi = any_xi || r.xi.has_value();
        any_err = any_err || r.stderr_.has_value();
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SweepRecord& r : records) {
        nlohmann::ordered_json row;
        row["gamma"] = r.gamma;
        row["eta"] = r.eta;
        row["J"] = r.J;
        // NaN serializes as null, which is what absent values should read as
        row["T"] = r.T;
        if (any_xi) {
            if (r.xi)
                row["xi"] = *r.xi;
            else
                row["xi"] = nullptr;
        }
        row["quantity"] = quantity_name(r.quantity);
        if (r.value)
            row["value"] = *r.value;
        else
            row["value"] = nullptr;
        if (any_err) {
            if (r.stderr_)
                row["stderr"] = *r.stderr_;
            else
                row["stderr"] = nullptr;
        }
        arr.push_back(std::move(row));
    }
    out << arr.dump(2) << '\n';
}

}  // namespace xy
