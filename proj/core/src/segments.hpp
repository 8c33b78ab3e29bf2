#ifndef MRWLAB_SRC_SEGMENTS_HPP
#define MRWLAB_SRC_SEGMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "mrwlab/series.hpp"

namespace mrwlab::detail {

// Session segments of [from, to): position ranges that never cross a
// session boundary. With no calendar the whole range is one segment.
inline std::vector<std::pair<std::size_t, std::size_t>> session_segments(
    const Series& x, std::size_t from, std::size_t to) {
  std::vector<std::pair<std::size_t, std::size_t>> segs;
  if (from >= to) return segs;
  if (!x.calendar) {
    segs.emplace_back(from, to);
    return segs;
  }
  std::size_t s = x.calendar->session_of(from);
  std::size_t begin = from;
  while (begin < to) {
    const std::size_t end = std::min(to, x.calendar->session_end(s));
    segs.emplace_back(begin, end);
    begin = end;
    ++s;
  }
  return segs;
}

// OLS line over the unmasked points of [from, to); subtracts it in place.
inline void detrend_block(std::vector<double>& v,
                          const std::vector<std::uint8_t>& m, std::size_t from,
                          std::size_t to) {
  double n = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = from; i < to; ++i) {
    if (!m[i]) continue;
    const double t = static_cast<double>(i - from);
    n += 1.0;
    sx += t;
    sy += v[i];
    sxx += t * t;
    sxy += t * v[i];
  }
  if (n < 2.0) return;
  const double det = n * sxx - sx * sx;
  if (det == 0.0) return;  // single distinct abscissa
  const double slope = (n * sxy - sx * sy) / det;
  const double intercept = (sy - slope * sx) / n;
  for (std::size_t i = from; i < to; ++i) {
    if (!m[i]) continue;
    v[i] -= intercept + slope * static_cast<double>(i - from);
  }
}

// Per-segment block tiling: complete blocks, then a trailing partial of
// length >= 2 with its own fit; a segment shorter than one block is left
// unchanged.
inline void detrend_segment(std::vector<double>& v,
                            const std::vector<std::uint8_t>& m,
                            std::size_t begin, std::size_t end,
                            std::size_t block) {
  if (end - begin < block) return;
  std::size_t pos = begin;
  while (pos + block <= end) {
    detrend_block(v, m, pos, pos + block);
    pos += block;
  }
  if (end - pos >= 2) detrend_block(v, m, pos, end);
}

}  // namespace mrwlab::detail

#endif  // MRWLAB_SRC_SEGMENTS_HPP
