#pragma once

#include <string>
#include <vector>

namespace oalg {

/// Integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    [[nodiscard]] int size() const;
    [[nodiscard]] int length() const { return static_cast<int>(parts.size()); }
    [[nodiscard]] int part(int i) const {
        return i >= 1 && i <= length() ? parts[i - 1] : 0;
    }
    [[nodiscard]] bool empty() const { return parts.empty(); }
    [[nodiscard]] bool fits_in_box(int rows, int cols) const;
    [[nodiscard]] Partition conjugate() const;

    /// Complement inside a rows x cols box; requires fits_in_box(rows, cols).
    [[nodiscard]] Partition complement_in_box(int rows, int cols) const;

    /// Sum of the parts strictly above row i (1-based).
    [[nodiscard]] int sum_above(int i) const;
    /// Sum of the parts strictly below row i (1-based).
    [[nodiscard]] int sum_below(int i) const;

    /// Rows where a box can be added (including the new row length()+1),
    /// 1-based, ascending.
    [[nodiscard]] std::vector<int> addable_rows() const;
    /// Rows where a box can be removed, 1-based, ascending.
    [[nodiscard]] std::vector<int> removable_rows() const;
    [[nodiscard]] Partition add_box(int row) const;
    [[nodiscard]] Partition remove_box(int row) const;
    /// Content (column - row) of the box added in the given row.
    [[nodiscard]] int added_box_content(int row) const { return part(row) + 1 - row; }

    /// All parts even and every part value occurring an even number of times.
    [[nodiscard]] bool is_lima() const { return is_p_lima(2); }
    /// All parts divisible by p and every part value occurring a multiple of p times.
    [[nodiscard]] bool is_p_lima(int p) const;

    /// "[4,4,2,2]" with "[]" for the empty partition.
    [[nodiscard]] std::string str() const;
    static Partition parse(const std::string& text);

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts == b.parts;
    }
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts < b.parts;
    }
};

/// All partitions of m (empty list only contains [] when m = 0).
std::vector<Partition> partitions_of(int m);

/// All partitions of m with at most max_rows rows and parts at most max_cols.
std::vector<Partition> partitions_of_in_box(int m, int max_rows, int max_cols);

/// All partitions fitting in a rows x cols box, every size, sorted by (size, parts).
std::vector<Partition> partitions_in_box(int rows, int cols);

} // namespace oalg
