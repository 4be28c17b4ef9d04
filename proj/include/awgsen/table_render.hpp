/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "awgsen/awg.hpp"
#include "awgsen/modular_shuffle.hpp"

namespace awgsen {

enum class TableFormat { csv, text, markdown };

inline TableFormat parse_table_format(std::string_view name) {
    if (name == "csv") return TableFormat::csv;
    if (name == "text") return TableFormat::text;
    if (name == "markdown") return TableFormat::markdown;
    throw std::invalid_argument("unknown table format '" + std::string(name) + "'");
}

/// Label/cell grid ready for serialization. CSV output carries the column
/// labels and data cells only; text and markdown add the corner and row
/// labels around the grid.
struct TextTable {
    std::string corner;
    std::vector<std::string> col_labels;
    std::vector<std::string> row_labels;
    std::vector<std::vector<std::string>> cells;
};

namespace detail {

inline std::string csv_quote(const std::string& field) {
    bool needs_quotes = field.find_first_of(",\"\n") != std::string::npos;
    if (!needs_quotes) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

// display width in code points so that aligned text stays aligned with λ cells
inline std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s) {
        if ((c & 0xC0) != 0x80) {
            ++w;
        }
    }
    return w;
}

inline std::string pad_left(const std::string& s, std::size_t width) {
    std::size_t w = display_width(s);
    return std::string(width > w ? width - w : 0, ' ') + s;
}

}  // namespace detail

inline std::string render_csv(const TextTable& t) {
    std::string out;
    for (std::size_t c = 0; c < t.col_labels.size(); ++c) {
        if (c > 0) {
            out += ',';
        }
        out += detail::csv_quote(t.col_labels[c]);
    }
    out += '\n';
    for (const auto& row : t.cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) {
                out += ',';
            }
            out += detail::csv_quote(row[c]);
        }
        out += '\n';
    }
    return out;
}

inline std::string render_text(const TextTable& t) {
    std::size_t label_width = detail::display_width(t.corner);
    for (const auto& r : t.row_labels) {
        label_width = std::max(label_width, detail::display_width(r));
    }
    std::vector<std::size_t> widths(t.col_labels.size(), 0);
    for (std::size_t c = 0; c < t.col_labels.size(); ++c) {
        widths[c] = detail::display_width(t.col_labels[c]);
        for (const auto& row : t.cells) {
            widths[c] = std::max(widths[c], detail::display_width(row[c]));
        }
    }
    std::string out = detail::pad_left(t.corner, label_width);
    for (std::size_t c = 0; c < t.col_labels.size(); ++c) {
        out += "  " + detail::pad_left(t.col_labels[c], widths[c]);
    }
    out += '\n';
    for (std::size_t r = 0; r < t.cells.size(); ++r) {
        out += detail::pad_left(r < t.row_labels.size() ? t.row_labels[r] : "",
                                label_width);
        for (std::size_t c = 0; c < t.cells[r].size(); ++c) {
            out += "  " + detail::pad_left(t.cells[r][c], widths[c]);
        }
        out += '\n';
    }
    return out;
}

inline std::string render_markdown(const TextTable& t) {
    std::string out = "| " + t.corner + " |";
    for (const auto& label : t.col_labels) {
        out += " " + label + " |";
    }
    out += "\n| --- |";
    for (std::size_t c = 0; c < t.col_labels.size(); ++c) {
        out += " --- |";
    }
    out += '\n';
    for (std::size_t r = 0; r < t.cells.size(); ++r) {
        out += "| " + (r < t.row_labels.size() ? t.row_labels[r] : "") + " |";
        for (const auto& cell : t.cells[r]) {
            out += " " + cell + " |";
        }
        out += '\n';
    }
    return out;
}

inline std::string render(const TextTable& t, TableFormat format) {
    switch (format) {
        case TableFormat::csv:
            return render_csv(t);
        case TableFormat::text:
            return render_text(t);
        case TableFormat::markdown:
            return render_markdown(t);
    }
    throw std::invalid_argument("unknown table format");
}

inline std::string lambda_cell(int wavelength) {
    return "\xce\xbb" + std::to_string(wavelength);  // λk
}

inline std::string modular_col_label(int awg, int awg_out) {
    return "(" + std::to_string(awg) + "," + std::to_string(awg_out) + ")";
}

inline TextTable to_text_table(const RoutingTable& t, TableFormat format) {
    TextTable out;
    out.corner = "p\\q";
    for (int q = 0; q < t.cols; ++q) {
        out.col_labels.push_back(std::to_string(q));
    }
    for (int p = 0; p < t.rows; ++p) {
        out.row_labels.push_back(std::to_string(p));
        std::vector<std::string> row;
        for (int q = 0; q < t.cols; ++q) {
            row.push_back(format == TableFormat::csv ? std::to_string(t.at(p, q))
                                                     : lambda_cell(t.at(p, q)));
        }
        out.cells.push_back(std::move(row));
    }
    return out;
}

inline TextTable to_text_table(const ModularTable& t, TableFormat format) {
    TextTable out;
    out.corner = "p\\aq'";
    for (int q = 0; q < t.cols(); ++q) {
        out.col_labels.push_back(modular_col_label(q / t.m, q % t.m));
    }
    for (int p = 0; p < t.m; ++p) {
        out.row_labels.push_back(std::to_string(p));
        std::vector<std::string> row;
        for (int q = 0; q < t.cols(); ++q) {
            row.push_back(format == TableFormat::csv
                              ? std::to_string(t.at_flat(p, q))
                              : lambda_cell(t.at_flat(p, q)));
        }
        out.cells.push_back(std::move(row));
    }
    return out;
}

inline TextTable to_text_table(const ConnectivityTable& t) {
    TextTable out;
    out.corner = "p\\q";
    for (int q = 0; q < t.cols; ++q) {
        out.col_labels.push_back(std::to_string(q));
    }
    for (int p = 0; p < t.rows; ++p) {
        out.row_labels.push_back(std::to_string(p));
        std::vector<std::string> row;
        for (int q = 0; q < t.cols; ++q) {
            const auto& [in, outv] = t.at(p, q);
            row.push_back(to_text(in) + "," + to_text(outv));
        }
        out.cells.push_back(std::move(row));
    }
    return out;
}

inline TextTable to_text_table(const WConnectivityTable& t) {
    // channel triples print like addresses: concatenated fields for small
    // bases, dot-separated otherwise
    const bool dotted = t.m > 10 || t.r > 10;
    auto triple = [dotted](int a, int b, int c) {
        std::string sep = dotted ? "." : "";
        return std::to_string(a) + sep + std::to_string(b) + sep + std::to_string(c);
    };
    TextTable out;
    out.corner = "p\\aq'";
    for (int q = 0; q < t.cols(); ++q) {
        out.col_labels.push_back(modular_col_label(q / t.m, q % t.m));
    }
    for (int p = 0; p < t.m; ++p) {
        out.row_labels.push_back(std::to_string(p));
        std::vector<std::string> row;
        for (int q = 0; q < t.cols(); ++q) {
            const auto& [in, outv] = t.at_flat(p, q);
            row.push_back(triple(in.group, in.port, in.wave) + "," +
                          triple(outv.awg, outv.awg_out, outv.port));
        }
        out.cells.push_back(std::move(row));
    }
    return out;
}

inline std::string render_table(const RoutingTable& t, TableFormat format) {
    return render(to_text_table(t, format), format);
}

inline std::string render_table(const ModularTable& t, TableFormat format) {
    return render(to_text_table(t, format), format);
}

inline std::string render_table(const ConnectivityTable& t, TableFormat format) {
    return render(to_text_table(t), format);
}

inline std::string render_table(const WConnectivityTable& t, TableFormat format) {
    return render(to_text_table(t), format);
}

}  // namespace awgsen
