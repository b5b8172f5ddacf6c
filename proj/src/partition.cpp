#include "oalg/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oalg {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
            throw std::invalid_argument("not weakly decreasing positive parts");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::fits_in_box(int rows, int cols) const {
    return length() <= rows && (parts.empty() || parts[0] <= cols);
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int col = 1; !parts.empty() && col <= parts[0]; ++col) {
        int count = 0;
        for (int p : parts)
            if (p >= col) ++count;
        c.push_back(count);
    }
    return Partition(std::move(c));
}

Partition Partition::complement_in_box(int rows, int cols) const {
    if (!fits_in_box(rows, cols)) throw std::invalid_argument("partition exceeds box");
    std::vector<int> c;
    for (int i = rows; i >= 1; --i) c.push_back(cols - part(i));
    return Partition(std::move(c));
}

int Partition::sum_above(int i) const {
    int s = 0;
    for (int j = 1; j < i; ++j) s += part(j);
    return s;
}

int Partition::sum_below(int i) const {
    int s = 0;
    for (int j = i + 1; j <= length(); ++j) s += part(j);
    return s;
}

std::vector<int> Partition::addable_rows() const {
    std::vector<int> rows;
    for (int i = 1; i <= length() + 1; ++i)
        if (i == 1 || part(i) < part(i - 1)) rows.push_back(i);
    return rows;
}

std::vector<int> Partition::removable_rows() const {
    std::vector<int> rows;
    for (int i = 1; i <= length(); ++i)
        if (part(i) > part(i + 1)) rows.push_back(i);
    return rows;
}

Partition Partition::add_box(int row) const {
    std::vector<int> p = parts;
    if (row == length() + 1) p.push_back(1);
    else p[row - 1] += 1;
    return Partition(std::move(p));
}

Partition Partition::remove_box(int row) const {
    std::vector<int> p = parts;
    p[row - 1] -= 1;
    return Partition(std::move(p));
}

bool Partition::is_p_lima(int p) const {
    std::map<int, int> mult;
    for (int x : parts) {
        if (x % p != 0) return false;
        ++mult[x];
    }
    for (const auto& [value, count] : mult) {
        (void)value;
        if (count % p != 0) return false;
    }
    return true;
}

std::string Partition::str() const {
    std::string s = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + "]";
}

Partition Partition::parse(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') throw std::invalid_argument("expected '['");
    ++pos;
    std::vector<int> parts;
    skip_ws();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            skip_ws();
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw std::invalid_argument("expected part");
            parts.push_back(std::stoi(text.substr(start, pos - start)));
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
                break;
            }
            throw std::invalid_argument("expected ',' or ']'");
        }
    }
    skip_ws();
    if (pos != text.size()) throw std::invalid_argument("trailing characters after partition");
    return Partition(std::move(parts));
}

namespace {

void enumerate(int remaining, int max_part, int max_rows, std::vector<int>& acc,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (max_rows == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate(remaining - p, p, max_rows - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int m) {
    return partitions_of_in_box(m, m, m);
}

std::vector<Partition> partitions_of_in_box(int m, int max_rows, int max_cols) {
    std::vector<Partition> out;
    if (m < 0) return out;
    std::vector<int> acc;
    enumerate(m, max_cols, max_rows, acc, out);
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    for (int m = 0; m <= rows * cols; ++m) {
        auto layer = partitions_of_in_box(m, rows, cols);
        std::sort(layer.begin(), layer.end());
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace oalg
