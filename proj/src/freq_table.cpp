#include "bexsam/freq_table.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace bexsam {

int FrequencyTable::slot_of(VarLabel j) const {
    for (int s = 0; s < width(); ++s) {
        if (labels[s] == j) return s;
    }
    return -1;
}

FrequencyTable build_frequency_table(const Dataset& data, int max_width) {
    if (data.rows.empty()) {
        throw std::invalid_argument("cannot build a frequency table from an empty data set");
    }
    const int m = data.width();
    if (m > max_width) {
        throw std::length_error("frequency table width " + std::to_string(m) +
                                " exceeds the 2^" + std::to_string(max_width) +
                                "-entry memory cap");
    }

    FrequencyTable ft;
    ft.labels = data.labels;
    ft.weights.assign(size_t{1} << m, 0.0);
    ft.count_mode = true;
    for (const auto& row : data.rows) {
        size_t idx = 0;
        for (int c = 0; c < m; ++c) {
            if (row[c] > 1) {
                throw std::invalid_argument("non-binary value in data set");
            }
            idx = (idx << 1) | row[c];
        }
        ft.weights[idx] += 1.0;
    }
    ft.total = static_cast<double>(data.rows.size());
    return ft;
}

FrequencyTable marginalize(const FrequencyTable& ft, VarLabel i) {
    const int slot = ft.slot_of(i);
    if (slot < 0) {
        throw std::out_of_range("label " + std::to_string(i) + " not in frequency table");
    }
    const int m = ft.width();
    const int shift = m - 1 - slot;  // bit position of the removed label
    const size_t low_mask = (size_t{1} << shift) - 1;

    FrequencyTable out;
    out.labels = ft.labels;
    out.labels.erase(out.labels.begin() + slot);
    out.weights.assign(size_t{1} << (m - 1), 0.0);
    out.total = ft.total;
    out.count_mode = ft.count_mode;

    for (size_t idx = 0; idx < ft.weights.size(); ++idx) {
        const size_t reduced = ((idx >> (shift + 1)) << shift) | (idx & low_mask);
        out.weights[reduced] += ft.weights[idx];
    }
    return out;
}

SelectionStats selection_stats(const FrequencyTable& ft, VarLabel i) {
    const int slot = ft.slot_of(i);
    if (slot < 0) {
        throw std::out_of_range("label " + std::to_string(i) + " not in frequency table");
    }
    const int m = ft.width();
    const int shift = m - 1 - slot;
    const size_t low_mask = (size_t{1} << shift) - 1;
    const size_t n_sel = size_t{1} << (m - 1);

    SelectionStats st;
    st.target = i;
    st.sel_weight.assign(n_sel, 0.0);
    st.p1.assign(n_sel, 0.0);
    st.defined.assign(n_sel, 0);

    for (size_t sel = 0; sel < n_sel; ++sel) {
        const size_t base = ((sel >> shift) << (shift + 1)) | (sel & low_mask);
        const double c0 = ft.weights[base];
        const double c1 = ft.weights[base | (size_t{1} << shift)];
        const double c = c0 + c1;
        st.sel_weight[sel] = c;
        if (c > 0.0) {
            st.p1[sel] = c1 / c;
            st.defined[sel] = 1;
            ++st.n_defined;
        }
    }
    return st;
}

std::string dump_csv(const FrequencyTable& ft) {
    std::ostringstream os;
    const int m = ft.width();
    for (size_t idx = 0; idx < ft.weights.size(); ++idx) {
        for (int b = m - 1; b >= 0; --b) {
            os << ((idx >> b) & 1);
        }
        os << ',' << ft.weights[idx] << '\n';
    }
    return os.str();
}

}  // namespace bexsam
