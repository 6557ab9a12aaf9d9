#include "powsum/render.hpp"

#include <sstream>

#include "powsum/errors.hpp"

namespace powsum {

std::string format_pascal_row(const SignedPascalRow& row) {
    std::ostringstream os;
    for (size_t k = 0; k < row.coefficients.size(); ++k) {
        if (k > 0) os << " ";
        os << row.coefficients[k].get_str(10);
    }
    return os.str();
}

std::string format_pascal_table(int n_max) {
    if (n_max < 2) throw InvalidExponent("table requires n_max >= 2");
    std::vector<std::string> cells;
    size_t width = 0;
    for (int n = 2; n <= n_max; ++n) {
        SignedPascalRow row = pascal_row(n);
        std::ostringstream os;
        for (int k = 0; k <= n; ++k) {
            if (k > 0) os << " ";
            if (k == 2) os << "[";
            os << row.coefficients[static_cast<size_t>(k)].get_str(10);
            if (k == n) os << "]";
        }
        cells.push_back(os.str());
        width = std::max(width, cells.back().size());
    }
    std::ostringstream table;
    for (int n = 2; n <= n_max; ++n) {
        std::string cell = cells[static_cast<size_t>(n - 2)];
        cell.resize(width, ' ');
        table << cell << "  n = " << n << "  A = " << (n - 1) << "\n";
    }
    return table.str();
}

std::string format_completion_record(const CompletionIdentity& id) {
    std::ostringstream os;
    os << "n = " << id.n << "\n";
    os << "P = " << id.p_poly.str() << "\n";
    auto groups = completion_terms(id.n);
    for (size_t i = 0; i < groups.size(); ++i)
        os << "term[" << i << "] = " << groups[i].str() << "\n";
    os << "verified = " << (id.verified ? "true" : "false") << "\n";
    return os.str();
}

std::string format_triples_csv(const std::vector<GenerationRecord>& records,
                               bool include_degenerate) {
    std::ostringstream os;
    os << "M,a,b,branch,A,B,C,valid\n";
    for (const auto& rec : records) {
        if (!rec.triple && !include_degenerate) continue;
        os << to_decimal(rec.params.m) << "," << to_decimal(rec.params.a)
           << "," << to_decimal(rec.params.b) << ","
           << branch_name(rec.params.branch) << "," << to_decimal(rec.raw_a)
           << "," << to_decimal(rec.raw_b) << "," << to_decimal(rec.raw_c)
           << "," << (rec.triple ? "true" : "false") << "\n";
    }
    return os.str();
}

}  // namespace powsum
