#include "menage/sequences.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "menage/classic.hpp"
#include "menage/oracle.hpp"
#include "menage/ternary.hpp"
#include "menage/transfer.hpp"

namespace menage {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void require_applicable(int k, int n_to, Method method) {
    switch (method) {
        case Method::touchard:
        case Method::inclusion_exclusion:
        case Method::eigen:
            if (k != 2) throw UsageError(method_name(method) + " requires k = 2");
            break;
        case Method::b2:
        case Method::diagonal:
            if (k != 3) throw UsageError(method_name(method) + " requires k = 3");
            break;
        case Method::bruteforce:
            if (n_to > 5) throw UsageError("bruteforce supports n up to 5");
            break;
        case Method::transfer:
            break;
    }
    if (k < 2) throw UsageError("k must be at least 2");
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::touchard: return "touchard";
        case Method::inclusion_exclusion: return "inclusion-exclusion";
        case Method::transfer: return "transfer";
        case Method::eigen: return "eigen";
        case Method::b2: return "b2";
        case Method::diagonal: return "diagonal";
        case Method::bruteforce: return "bruteforce";
    }
    return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
    for (Method m : {Method::touchard, Method::inclusion_exclusion, Method::transfer,
                     Method::eigen, Method::b2, Method::diagonal, Method::bruteforce})
        if (method_name(m) == name) return m;
    return std::nullopt;
}

std::optional<SequenceSpec> SequenceSpec::from_id(const std::string& id) {
    if (id == "A059375") return SequenceSpec{id, 2, Normalization::none};
    if (id == "A000179") return SequenceSpec{id, 2, Normalization::divide_by_2nfact};
    if (id == "A094047") return SequenceSpec{id, 2, Normalization::divide_by_2n};
    if (id == "A258338") return SequenceSpec{id, 3, Normalization::none};
    if (id == "A114939") return SequenceSpec{id, 3, Normalization::divide_by_4n};
    return std::nullopt;
}

SequenceSpec SequenceSpec::raw(int k) { return SequenceSpec{"raw", k, Normalization::none}; }

ExactInt compute_term(int k, int n, Method method) {
    require_applicable(k, n, method);
    switch (method) {
        case Method::touchard: return touchard(n);
        case Method::inclusion_exclusion: return menage_inclusion_exclusion(n);
        case Method::eigen: return menage_eigen_recurrence(n);
        case Method::b2: return ternary_via_b2(n);
        case Method::diagonal: return ternary_via_diagonal(n);
        case Method::bruteforce:
            if (n == 0) return 1;
            return brute_force(k, n);
        case Method::transfer: return seatings_via_transfer(k, n);
    }
    throw std::logic_error("compute_term: unhandled method");
}

std::vector<TermRecord> compute_terms(int k, int n_from, int n_to, Method method) {
    if (n_from < 0 || n_to < n_from) throw UsageError("invalid n range");
    require_applicable(k, n_to, method);
    std::vector<TermRecord> out;
    out.reserve(n_to - n_from + 1);
    if (method == Method::transfer) {
        TransferSweep sweep(k, n_to);
        for (int n = 0; n <= n_to; ++n) {
            const auto start = Clock::now();
            ExactInt value = sweep.next();
            if (n >= n_from)
                out.push_back(TermRecord{k, n, std::move(value), method, ms_since(start)});
        }
        return out;
    }
    for (int n = n_from; n <= n_to; ++n) {
        const auto start = Clock::now();
        ExactInt value = compute_term(k, n, method);
        out.push_back(TermRecord{k, n, std::move(value), method, ms_since(start)});
    }
    return out;
}

ExactInt apply_normalization(const SequenceSpec& spec, int n, const ExactInt& raw) {
    switch (spec.norm) {
        case Normalization::none: return raw;
        case Normalization::divide_by_2nfact:
            if (n == 0)
                throw UsageError(spec.id + " is undefined at n = 0: M_0/(2*0!) = 1/2 is not an integer");
            return div_exact(raw, 2 * factorial(n));
        case Normalization::divide_by_2n:
            if (n == 0) throw UsageError(spec.id + " is undefined at n = 0 (division by 2n)");
            return div_exact(raw, 2 * ExactInt(n));
        case Normalization::divide_by_4n:
            if (n == 0) throw UsageError(spec.id + " is undefined at n = 0 (division by 4n)");
            return div_exact(raw, 4 * ExactInt(n));
    }
    throw std::logic_error("apply_normalization: unhandled normalization");
}

std::optional<OutputFormat> format_from_name(const std::string& name) {
    if (name == "plain") return OutputFormat::plain;
    if (name == "bfile") return OutputFormat::bfile;
    if (name == "json") return OutputFormat::json;
    return std::nullopt;
}

std::string render_terms(const SequenceSpec& spec, const std::vector<TermRecord>& terms,
                         OutputFormat format) {
    switch (format) {
        case OutputFormat::plain: {
            std::string out;
            for (const TermRecord& r : terms) {
                out += to_string(apply_normalization(spec, r.n, r.value));
                out += '\n';
            }
            return out;
        }
        case OutputFormat::bfile: {
            std::string out;
            for (const TermRecord& r : terms) {
                out += std::to_string(r.n);
                out += ' ';
                out += to_string(apply_normalization(spec, r.n, r.value));
                out += '\n';
            }
            return out;
        }
        case OutputFormat::json: {
            json doc;
            doc["k"] = spec.k;
            doc["sequence"] = spec.id;
            doc["method"] = terms.empty() ? "" : method_name(terms.front().method);
            json list = json::array();
            for (const TermRecord& r : terms)
                list.push_back({{"n", r.n},
                                {"value", to_string(apply_normalization(spec, r.n, r.value))}});
            doc["terms"] = std::move(list);
            return doc.dump(2) + "\n";
        }
    }
    throw std::logic_error("render_terms: unhandled format");
}

VerifyReport build_verify_report(const std::vector<Method>& methods,
                                 const std::vector<VerifyRow>& rows) {
    VerifyReport report;
    report.methods = methods;
    report.rows = rows;
    for (VerifyRow& row : report.rows) {
        row.agree = std::all_of(row.values.begin(), row.values.end(),
                                [&](const ExactInt& v) { return v == row.values.front(); });
        report.all_agree = report.all_agree && row.agree;
    }
    return report;
}

VerifyReport verify_methods(int k, int n_max, const std::vector<Method>& methods) {
    if (methods.size() < 2) throw UsageError("verify needs at least two methods");
    if (n_max < 1) throw UsageError("verify needs n-max >= 1");
    std::vector<std::vector<TermRecord>> per_method;
    per_method.reserve(methods.size());
    for (Method m : methods) per_method.push_back(compute_terms(k, 1, n_max, m));

    std::vector<VerifyRow> rows(n_max);
    for (int n = 1; n <= n_max; ++n) {
        rows[n - 1].n = n;
        for (const auto& terms : per_method) rows[n - 1].values.push_back(terms[n - 1].value);
    }
    return build_verify_report(methods, rows);
}

std::string VerifyReport::render() const {
    std::ostringstream out;
    for (const VerifyRow& row : rows) {
        out << "n=" << row.n;
        for (std::size_t i = 0; i < methods.size(); ++i)
            out << ' ' << method_name(methods[i]) << '=' << row.values[i].get_str();
        out << (row.agree ? "  ok" : "  MISMATCH") << '\n';
    }
    out << (all_agree ? "all methods agree" : "verification FAILED") << '\n';
    return out.str();
}

TermCache TermCache::load(const std::string& path) {
    TermCache cache;
    std::ifstream in(path);
    if (!in) return cache;  // missing file: empty cache
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            const json doc = json::parse(line);
            Key key{doc.at("k").get<int>(), doc.at("n").get<int>(),
                    doc.at("method").get<std::string>()};
            cache.records_.emplace_back(std::move(key),
                                        ExactInt(doc.at("value").get<std::string>(), 10));
        } catch (const std::exception& e) {
            std::cerr << "warning: skipping corrupt cache line " << line_no << " in " << path
                      << ": " << e.what() << '\n';
        }
    }
    return cache;
}

std::optional<ExactInt> TermCache::find(int k, int n, Method method) const {
    const Key key{k, n, method_name(method)};
    for (const auto& [rec_key, value] : records_)
        if (rec_key == key) return value;
    return std::nullopt;
}

void TermCache::append(const std::string& path, const TermRecord& record) {
    json doc;
    doc["k"] = record.k;
    doc["n"] = record.n;
    doc["value"] = to_string(record.value);
    doc["method"] = method_name(record.method);
    doc["elapsed_ms"] = record.elapsed_ms;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file " + path);
    out << doc.dump() << '\n';
}

}  // namespace menage
