#pragma once

#include <optional>
#include <string>
#include <vector>

#include "menage/exact.hpp"

namespace menage {

// Computation methods exposed by the CLI. Applicability: touchard,
// inclusion-exclusion and eigen need k = 2; b2 and diagonal need k = 3;
// transfer and bruteforce work for any k (bruteforce up to n = 5).
enum class Method {
    touchard,
    inclusion_exclusion,
    transfer,
    eigen,
    b2,
    diagonal,
    bruteforce,
};

std::string method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

enum class Normalization { none, divide_by_2nfact, divide_by_2n, divide_by_4n };

// A named sequence (or a raw k) plus the normalization that maps seating
// counts to its terms.
struct SequenceSpec {
    std::string id;  // A059375, A000179, A094047, A258338, A114939 or "raw"
    int k = 2;
    Normalization norm = Normalization::none;

    static std::optional<SequenceSpec> from_id(const std::string& id);
    static SequenceSpec raw(int k);
};

struct TermRecord {
    int k = 0;
    int n = 0;
    ExactInt value;
    Method method = Method::transfer;
    long elapsed_ms = 0;
};

// Raised for violations of the CLI contract (unknown sequence, method not
// applicable to k, unsupported range). Maps to exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Seating count for one (k, n) by the requested method. Throws UsageError
/// when the method does not apply.
ExactInt compute_term(int k, int n, Method method);

/// Raw seating counts for n = n_from..n_to (inclusive), sharing work across
/// the range where the method allows it (the transfer path advances one
/// incremental matrix power per term).
std::vector<TermRecord> compute_terms(int k, int n_from, int n_to, Method method);

/// Applies the sequence's normalization to a raw count. Throws UsageError
/// for n = 0 (where the normalizations are non-integral or undefined) and
/// std::domain_error if the division is not exact (an engine bug).
ExactInt apply_normalization(const SequenceSpec& spec, int n, const ExactInt& raw);

enum class OutputFormat { plain, bfile, json };
std::optional<OutputFormat> format_from_name(const std::string& name);

/// Normalized terms rendered in the requested format. bfile lines are
/// `n value`, one per line; plain is one value per line; json is an object
/// with the value as a decimal string.
std::string render_terms(const SequenceSpec& spec, const std::vector<TermRecord>& terms,
                         OutputFormat format);

struct VerifyRow {
    int n = 0;
    std::vector<ExactInt> values;  // one per method, same order as the query
    bool agree = true;
};

struct VerifyReport {
    std::vector<Method> methods;
    std::vector<VerifyRow> rows;
    bool all_agree = true;

    std::string render() const;
};

/// Computes every term n = 1..n_max with every listed method. Requires at
/// least two methods, all applicable to k.
VerifyReport verify_methods(int k, int n_max, const std::vector<Method>& methods);

/// Builds the report from precomputed rows (exposed so the mismatch path is
/// testable; a correct engine never disagrees with itself).
VerifyReport build_verify_report(const std::vector<Method>& methods,
                                 const std::vector<VerifyRow>& rows);

// Append-only journal of computed terms, one JSON object per line. Corrupt
// lines are skipped with a warning on stderr.
class TermCache {
  public:
    static TermCache load(const std::string& path);

    std::optional<ExactInt> find(int k, int n, Method method) const;
    std::size_t size() const { return records_.size(); }

    static void append(const std::string& path, const TermRecord& record);

  private:
    struct Key {
        int k;
        int n;
        std::string method;
        auto operator<=>(const Key&) const = default;
    };
    std::vector<std::pair<Key, ExactInt>> records_;
};

}  // namespace menage
