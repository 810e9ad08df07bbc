#ifndef COPOSIT_TENSOR_FILE_HPP
#define COPOSIT_TENSOR_FILE_HPP

#include "tensor.hpp"

#include <string>
#include <vector>

namespace coposit {

// Structured-text tensor document (JSON subset, one entry per line when
// written by us). Values are read losslessly: decimal literals and "p/q"
// strings both land in exact rationals.
//
//   {
//     "order": 4,
//     "dim": 3,
//     "entries": [
//       {"index": [1,1,2,3], "value": "-1"},
//       {"index": [1,1,1,1], "value": 2.5}
//     ]
//   }
//
// Unknown fields are rejected.
struct TensorFile {
    int order = 0;
    int dim = 0;
    std::vector<std::pair<std::vector<int>, Rational>> entries;

    static TensorFile parse(const std::string& text);  // throws ParseError
    static TensorFile load(const std::string& path);

    std::string write() const;  // deterministic bytes
    void save(const std::string& path) const;

    SymTensor4 to_tensor4() const;  // order 4
    SymMatrix to_matrix() const;    // order 2
    Cubic2 to_cubic() const;        // order 3, dim 2

    static TensorFile from_tensor4(const SymTensor4& t);
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coposit

#endif
