#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "tissue/errors.hpp"
#include "tissue/rng.hpp"

namespace tissue {

/// Dense row-major tensor. Rank is dynamic; the networks use [B,F] for
/// feature tensors and [B,H,W,C] for images / feature maps.
template <typename T>
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
        data_.assign(numel_of(shape_), T(0));
    }
    Tensor(std::initializer_list<int> shape) : Tensor(std::vector<int>(shape)) {}

    static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }

    static Tensor full(std::vector<int> shape, T value) {
        Tensor t(std::move(shape));
        t.fill(value);
        return t;
    }

    static Tensor randn(std::vector<int> shape, Rng& rng, T stddev = T(1)) {
        Tensor t(std::move(shape));
        for (auto& v : t.data_) v = static_cast<T>(rng.gauss()) * stddev;
        return t;
    }

    const std::vector<int>& shape() const { return shape_; }
    int dim(std::size_t i) const { return shape_[i]; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    std::vector<T>& vec() { return data_; }
    const std::vector<T>& vec() const { return data_; }

    T& operator[](std::size_t i) { return data_[i]; }
    const T& operator[](std::size_t i) const { return data_[i]; }

    // [B,F]
    T& at(int b, int f) { return data_[static_cast<std::size_t>(b) * shape_[1] + f]; }
    const T& at(int b, int f) const { return data_[static_cast<std::size_t>(b) * shape_[1] + f]; }

    // [B,H,W,C]
    T& at(int b, int h, int w, int c) {
        return data_[((static_cast<std::size_t>(b) * shape_[1] + h) * shape_[2] + w) * shape_[3] + c];
    }
    const T& at(int b, int h, int w, int c) const {
        return data_[((static_cast<std::size_t>(b) * shape_[1] + h) * shape_[2] + w) * shape_[3] + c];
    }

    void fill(T value) { data_.assign(data_.size(), value); }

    Tensor reshaped(std::vector<int> shape) const {
        if (numel_of(shape) != data_.size())
            throw ShapeError("reshape: element count mismatch " + shape_str(shape_) + " -> " + shape_str(shape));
        Tensor t;
        t.shape_ = std::move(shape);
        t.data_ = data_;
        return t;
    }

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

    bool all_finite() const {
        for (const T& v : data_)
            if (!std::isfinite(static_cast<double>(v))) return false;
        return true;
    }

    template <typename U>
    Tensor<U> cast() const {
        Tensor<U> t(shape_);
        for (std::size_t i = 0; i < data_.size(); ++i) t[i] = static_cast<U>(data_[i]);
        return t;
    }

    static std::string shape_str(const std::vector<int>& s) {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
        os << "]";
        return os.str();
    }
    std::string shape_str() const { return shape_str(shape_); }

private:
    static std::size_t numel_of(const std::vector<int>& shape) {
        std::size_t n = 1;
        for (int d : shape) {
            if (d < 0) throw ShapeError("negative dimension in " + shape_str(shape));
            n *= static_cast<std::size_t>(d);
        }
        return shape.empty() ? 0 : n;
    }

    std::vector<int> shape_;
    std::vector<T> data_;
};

template <typename T>
void check_shape(const Tensor<T>& t, const std::vector<int>& expect, const char* what) {
    if (t.shape() != expect)
        throw ShapeError(std::string(what) + ": expected " + Tensor<T>::shape_str(expect) + ", got " + t.shape_str());
}

}  // namespace tissue
