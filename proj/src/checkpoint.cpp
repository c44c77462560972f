#include <bit>
#include <cstring>
#include <fstream>

#include "plasmawave/dynamics.hpp"

namespace pw {

static_assert(std::endian::native == std::endian::little, "checkpoint IO assumes a little-endian host");

namespace {

template <class T>
void put(std::ofstream& os, T v) {
    char buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    os.write(buf, sizeof(T));
}

template <class T>
T get(std::ifstream& is, const std::string& path) {
    char buf[sizeof(T)];
    if (!is.read(buf, sizeof(T))) throw Error(ErrorKind::io, "truncated checkpoint " + path);
    T v;
    std::memcpy(&v, buf, sizeof(T));
    return v;
}

}  // namespace

void write_checkpoint(const std::string& path, const GridSpec& g, const State& s) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(ErrorKind::io, "cannot write checkpoint " + path);
    os.write("EPKG", 4);
    put<std::uint32_t>(os, checkpoint_version);
    put<std::uint64_t>(os, g.num_points);
    put<double>(os, g.box_length);
    put<double>(os, time_of(s));
    put<std::uint8_t>(os, static_cast<std::uint8_t>(formulation_of(s)));
    auto pairs = [&](const rvec& a, const rvec& b) {
        for (std::size_t j = 0; j < g.num_points; ++j) {
            put<double>(os, a.at(j));
            put<double>(os, b.at(j));
        }
    };
    switch (formulation_of(s)) {
    case Formulation::nv: pairs(std::get<StateNV>(s).n, std::get<StateNV>(s).v); break;
    case Formulation::ev: pairs(std::get<StateEV>(s).E, std::get<StateEV>(s).v); break;
    case Formulation::ru: pairs(std::get<StateRU>(s).r, std::get<StateRU>(s).u); break;
    case Formulation::h:
        for (const cplx& z : std::get<ComplexState>(s).h) {
            put<double>(os, z.real());
            put<double>(os, z.imag());
        }
        break;
    }
    if (!os) throw Error(ErrorKind::io, "write failed for checkpoint " + path);
}

State read_checkpoint(const std::string& path, GridSpec& g) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error(ErrorKind::io, "cannot open checkpoint " + path);
    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, "EPKG", 4) != 0)
        throw Error(ErrorKind::io, "bad checkpoint magic in " + path);
    const auto version = get<std::uint32_t>(is, path);
    if (version != checkpoint_version)
        throw Error(ErrorKind::io, "unsupported checkpoint version " + std::to_string(version));
    const auto n = get<std::uint64_t>(is, path);
    const double L = get<double>(is, path);
    const double t = get<double>(is, path);
    const auto tag = get<std::uint8_t>(is, path);
    if (tag > 3) throw Error(ErrorKind::io, "bad formulation tag in " + path);
    g = GridSpec(static_cast<std::size_t>(n), L);
    rvec a(n), b(n);
    for (std::size_t j = 0; j < n; ++j) {
        a[j] = get<double>(is, path);
        b[j] = get<double>(is, path);
    }
    switch (static_cast<Formulation>(tag)) {
    case Formulation::nv: return StateNV{a, b, t};
    case Formulation::ev: return StateEV{a, b, t};
    case Formulation::ru: return StateRU{a, b, t};
    case Formulation::h: {
        cvec h(n);
        for (std::size_t j = 0; j < n; ++j) h[j] = cplx(a[j], b[j]);
        return ComplexState{h, t};
    }
    }
    throw Error(ErrorKind::io, "bad formulation tag");
}

}  // namespace pw
