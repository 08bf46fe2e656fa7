#pragma once

#include <span>
#include <string_view>

#include "ncdtree/compressor.hpp"
#include "ncdtree/distance_matrix.hpp"
#include "ncdtree/document.hpp"

namespace ncdtree {

enum class NumeratorMode {
  Plain,         // C(xy)
  SymmetricMin,  // min{C(xy), C(yx)}
};

std::string_view to_string(NumeratorMode mode);
NumeratorMode numerator_mode_from_string(std::string_view name);

/// (C(xy) - min{C(x),C(y)}) / max{C(x),C(y)}.
///
/// Throws InvalidInput for empty content and DegenerateInput if both code
/// lengths are zero.
double ncd(const Compressor& compressor, const Document& x, const Document& y,
           NumeratorMode mode = NumeratorMode::Plain);

/// C(y|x) = C(xy) - C(x), in bytes. Can be slightly negative for real codecs.
double conditional_information(const Compressor& compressor, const Document& x, const Document& y);

struct MatrixOptions {
  NumeratorMode mode = NumeratorMode::Plain;
  bool symmetrize = true;
  unsigned workers = 1;
};

/// All n^2 NCD values. Diagonal entries are computed, not assumed zero. With
/// `symmetrize`, d(i,j) and d(j,i) are replaced by their mean. Output is
/// identical for any worker count.
DistanceMatrix build_matrix(const Compressor& compressor, std::span<const Document> docs,
                            const MatrixOptions& options = {});

}  // namespace ncdtree
