#include "tpb/version.hpp"

#include <Eigen/Core>
#include <boost/version.hpp>
#include <fftw3.h>

namespace tpb {

std::string version() { return TPB_VERSION_STRING; }

std::vector<std::pair<std::string, std::string>> dependency_versions() {
    const std::string eigen = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                              std::to_string(EIGEN_MINOR_VERSION);
    const std::string boost = std::to_string(BOOST_VERSION / 100000) + "." + std::to_string(BOOST_VERSION / 100 % 1000) +
                              "." + std::to_string(BOOST_VERSION % 100);
    return {{"eigen", eigen}, {"boost", boost}, {"fftw", fftw_version}};
}

}  // namespace tpb
