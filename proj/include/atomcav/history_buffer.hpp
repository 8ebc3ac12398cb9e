#ifndef ATOMCAV_HISTORY_BUFFER_HPP
#define ATOMCAV_HISTORY_BUFFER_HPP

#include <cassert>
#include <complex>
#include <cstddef>
#include <vector>

namespace atomcav {

// Ring storage of the most recent samples of one amplitude on the uniform
// integration grid. Lags are integer step counts (the grid is chosen so the
// physical delays d/v and 2d/v are exact multiples of dt); reads that would
// precede t = 0 return 0, which is the Theta(t - lag) factor of the DDEs.
class HistoryBuffer {
public:
    explicit HistoryBuffer(std::size_t max_lag_steps)
        : data_(max_lag_steps + 1, std::complex<double>(0.0, 0.0)),
          head_(0), count_(0) {}

    void push(std::complex<double> v) {
        head_ = (head_ + 1) % data_.size();
        data_[head_] = v;
        ++count_;  // total samples seen; index of newest is count_-1
    }

    // Sample lag steps behind the newest one; 0 before t = 0.
    std::complex<double> at_lag(std::size_t lag) const {
        assert(lag < data_.size());
        if (lag >= count_) return {0.0, 0.0};
        std::size_t idx = (head_ + data_.size() - lag) % data_.size();
        return data_[idx];
    }

    std::size_t samples_seen() const { return count_; }

private:
    std::vector<std::complex<double>> data_;
    std::size_t head_;
    std::size_t count_;
};

} // namespace atomcav

#endif
