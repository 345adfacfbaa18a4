#include "walg/pyramid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace walg {

int Partition::boxes() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::same_parity() const {
  for (int p : parts)
    if ((p - parts.front()) % 2 != 0) return false;
  return true;
}

void Partition::validate() const {
  if (parts.empty()) throw std::invalid_argument("partition: empty");
  int prev = parts.front();
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("partition: parts must be >= 1");
    if (p > prev) throw std::invalid_argument("partition: parts must be weakly decreasing");
    prev = p;
  }
}

Partition Partition::parse(const std::string& csv) {
  Partition out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("partition: empty component in '" + csv + "'");
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("partition: bad component '" + tok + "'");
    out.parts.push_back(v);
  }
  out.validate();
  return out;
}

Pyramid::Pyramid(Partition lambda) : lambda_(std::move(lambda)) {
  lambda_.validate();
  n_ = lambda_.boxes();
  row_of_.assign(static_cast<size_t>(n_) + 1, 0);
  col_of_.assign(static_cast<size_t>(n_) + 1, 0);
  int box = 1;
  for (int row = 1; row <= lambda_.rows(); ++row) {
    Half start = row_start_col(row);
    for (int idx = 0; idx < row_len(row); ++idx, ++box) {
      row_of_[box] = row;
      col_of_[box] = start + 2 * idx;
    }
  }
}

Half Pyramid::row_start_col(int row) const {
  if (row < 1 || row > lambda_.rows()) throw std::out_of_range("pyramid: row out of range");
  // (lambda_1 - lambda_i)/2 + 1, doubled.
  return lambda_.longest() - row_len(row) + 2;
}

int Pyramid::box_at(int row, Half col) const {
  if (row < 1 || row > lambda_.rows()) return 0;
  Half start = row_start_col(row);
  if (col < start || col > start + 2 * (row_len(row) - 1)) return 0;
  if ((col - start) % 2 != 0) return 0;
  int before = 0;
  for (int r = 1; r < row; ++r) before += row_len(r);
  return before + (col - start) / 2 + 1;
}

Pyramid::Bounds Pyramid::truncation_bounds(Half k) const {
  if (k < 0) throw std::out_of_range("truncation_bounds: k < 0");
  Half top = lambda_.longest() - 1;  // (lambda_1 - 1)/2, doubled
  if (k > top) throw std::out_of_range("truncation_bounds: k exceeds the top highest weight");
  Half mid = lambda_.longest() + 1;  // (lambda_1 + 1)/2, doubled
  return Bounds{mid - k, mid + k, k + 1};  // r = 2k+1 is plain, k is doubled

}

void Pyramid::check_box(int box) const {
  if (box < 1 || box > n_) throw std::out_of_range("pyramid: box index out of range");
}

std::string Pyramid::render() const {
  // Character canvas; every half-column is 3 characters wide, so a box spans
  // 6 characters plus its shared border.
  const int cell_w = 6;
  int width = (2 * lambda_.longest()) / 2 * cell_w + 1;
  int height = 2 * lambda_.rows() + 1 + 1;  // rows of boxes + final label line
  std::vector<std::string> canvas(static_cast<size_t>(height), std::string(static_cast<size_t>(width) + 8, ' '));

  auto put = [&](int r, int c, char ch) {
    if (r >= 0 && r < height && c >= 0 && c + 0 < static_cast<int>(canvas[0].size())) canvas[static_cast<size_t>(r)][static_cast<size_t>(c)] = ch;
  };
  auto puts = [&](int r, int c, const std::string& s) {
    for (size_t i = 0; i < s.size(); ++i) put(r, c + static_cast<int>(i), s[i]);
  };

  // Row i of the pyramid is drawn with its floor at canvas line 2*(n_rows-i)+2.
  for (int box = 1; box <= n_; ++box) {
    int row = row_of_[box];
    int base = 2 * (lambda_.rows() - row) + 2;
    int left = ((col_of_[box] - 2) * cell_w) / 2;
    puts(base, left, "+-----+");
    puts(base - 2, left, "+-----+");
    put(base - 1, left, '|');
    put(base - 1, left + cell_w, '|');
    std::string label = std::to_string(box);
    puts(base - 1, left + 1 + (5 - static_cast<int>(label.size())) / 2 + (5 - static_cast<int>(label.size())) % 2, label);
  }
  // Column labels under the base line.
  for (Half c = 2; c <= 2 * lambda_.longest(); c += 1) {
    bool used = false;
    for (int box = 1; box <= n_; ++box)
      if (col_of_[box] == c) { used = true; break; }
    if (!used) continue;
    std::string label = half_str_decimal(c);
    int center = ((c - 2) * cell_w) / 2 + cell_w / 2;
    puts(height - 1, center - static_cast<int>(label.size()) / 2 + 1, label);
  }

  std::string out;
  for (auto& line : canvas) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace walg
