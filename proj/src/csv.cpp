#include "atomcav/csv.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace atomcav {

namespace {

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream out(path, mode);
    if (!out)
        throw Error(ErrorCode::ValidationError, "cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path, std::ios::openmode mode = std::ios::in) {
    std::ifstream in(path, mode);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open for reading: " + path);
    return in;
}

std::vector<double> parse_row(const std::string& line, std::size_t expect,
                              const std::string& path) {
    std::vector<double> row;
    row.reserve(expect);
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        row.push_back(std::stod(cell));
    if (row.size() != expect)
        throw Error(ErrorCode::ParseError, "bad column count in " + path);
    return row;
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_trajectory_csv(const std::string& path, const AmplitudeTrajectory& traj) {
    std::ofstream out = open_out(path);
    out << "t,re_c0,im_c0,p0,re_clm,im_clm,plm,re_crm,im_crm,prm\n";
    for (std::size_t i = 0; i < traj.size(); ++i) {
        out << format_double(traj.times[i]) << ',' << format_double(traj.c0[i].real())
            << ',' << format_double(traj.c0[i].imag()) << ','
            << format_double(std::norm(traj.c0[i])) << ','
            << format_double(traj.c_lm[i].real()) << ','
            << format_double(traj.c_lm[i].imag()) << ','
            << format_double(std::norm(traj.c_lm[i])) << ','
            << format_double(traj.c_rm[i].real()) << ','
            << format_double(traj.c_rm[i].imag()) << ','
            << format_double(std::norm(traj.c_rm[i])) << '\n';
    }
}

AmplitudeTrajectory read_trajectory_csv(const std::string& path) {
    std::ifstream in = open_in(path);
    std::string line;
    if (!std::getline(in, line))
        throw Error(ErrorCode::ParseError, "empty trajectory file " + path);
    AmplitudeTrajectory traj;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<double> row = parse_row(line, 10, path);
        traj.times.push_back(row[0]);
        traj.c0.emplace_back(row[1], row[2]);
        traj.c_lm.emplace_back(row[4], row[5]);
        traj.c_rm.emplace_back(row[7], row[8]);
    }
    if (traj.times.size() >= 2) traj.dt = traj.times[1] - traj.times[0];
    return traj;
}

void write_spectrum_csv(const std::string& path, const SpectralResponse& resp) {
    std::ofstream out = open_out(path);
    out << "omega,re_f0,im_f0,density\n";
    for (std::size_t i = 0; i < resp.omega.size(); ++i) {
        out << format_double(resp.omega[i]) << ',' << format_double(resp.f0[i].real())
            << ',' << format_double(resp.f0[i].imag()) << ','
            << format_double(resp.density[i]) << '\n';
    }
}

SpectralResponse read_spectrum_csv(const std::string& path) {
    std::ifstream in = open_in(path);
    std::string line;
    if (!std::getline(in, line))
        throw Error(ErrorCode::ParseError, "empty spectrum file " + path);
    SpectralResponse resp;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<double> row = parse_row(line, 4, path);
        resp.omega.push_back(row[0]);
        resp.f0.emplace_back(row[1], row[2]);
        resp.density.push_back(row[3]);
    }
    return resp;
}

void write_poles_csv(const std::string& path, const PoleSet& poles) {
    std::ofstream out = open_out(path);
    out << "re_omega,im_omega,re_weight,im_weight,residual\n";
    for (const Pole& p : poles.poles) {
        out << format_double(p.omega.real()) << ',' << format_double(p.omega.imag())
            << ',' << format_double(p.weight.real()) << ','
            << format_double(p.weight.imag()) << ',' << format_double(p.residual)
            << '\n';
    }
}

PoleSet read_poles_csv(const std::string& path) {
    std::ifstream in = open_in(path);
    std::string line;
    if (!std::getline(in, line))
        throw Error(ErrorCode::ParseError, "empty poles file " + path);
    PoleSet set;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<double> row = parse_row(line, 5, path);
        Pole p;
        p.omega = {row[0], row[1]};
        p.weight = {row[2], row[3]};
        p.residual = row[4];
        set.poles.push_back(p);
    }
    return set;
}

void write_reconstruction_csv(const std::string& path, const Reconstruction& rec) {
    std::ofstream out = open_out(path);
    if (rec.has_reference)
        out << "t,re_c0_approx,im_c0_approx,p0_approx,p0_exact,abs_error\n";
    else
        out << "t,re_c0_approx,im_c0_approx,p0_approx\n";
    for (std::size_t i = 0; i < rec.times.size(); ++i) {
        out << format_double(rec.times[i]) << ','
            << format_double(rec.c0_approx[i].real()) << ','
            << format_double(rec.c0_approx[i].imag()) << ','
            << format_double(std::norm(rec.c0_approx[i]));
        if (rec.has_reference)
            out << ',' << format_double(rec.p0_exact[i]) << ','
                << format_double(rec.abs_error[i]);
        out << '\n';
    }
}

void write_sweep_csv(const std::string& path, const SweepResult& sweep) {
    std::ofstream out = open_out(path);
    out << sweep.axis_name << ",omega,density\n";
    for (std::size_t r = 0; r < sweep.axis.size(); ++r) {
        for (std::size_t i = 0; i < sweep.omega.size(); ++i) {
            out << format_double(sweep.axis[r]) << ',' << format_double(sweep.omega[i])
                << ',' << format_double(sweep.rows[r][i]) << '\n';
        }
    }
}

void write_intensity_csv(const std::string& path, const IntensityMap& map) {
    std::ofstream out = open_out(path);
    out << "x,t,intensity\n";
    for (std::size_t it = 0; it < map.t.size(); ++it) {
        for (std::size_t ix = 0; ix < map.x.size(); ++ix) {
            out << format_double(map.x[ix]) << ',' << format_double(map.t[it]) << ','
                << format_double(map.at(it, ix)) << '\n';
        }
    }
}

void write_intensity_bin(const std::string& path, const IntensityMap& map) {
    std::ofstream out = open_out(path, std::ios::binary);
    const std::uint64_t nt = map.t.size(), nx = map.x.size();
    out.write(reinterpret_cast<const char*>(&nt), sizeof nt);
    out.write(reinterpret_cast<const char*>(&nx), sizeof nx);
    out.write(reinterpret_cast<const char*>(map.values.data()),
              static_cast<std::streamsize>(map.values.size() * sizeof(double)));
}

IntensityMap read_intensity_bin(const std::string& path) {
    std::ifstream in = open_in(path, std::ios::binary);
    std::uint64_t nt = 0, nx = 0;
    in.read(reinterpret_cast<char*>(&nt), sizeof nt);
    in.read(reinterpret_cast<char*>(&nx), sizeof nx);
    if (!in) throw Error(ErrorCode::ParseError, "truncated intensity dump " + path);
    IntensityMap map;
    map.t.resize(nt);
    map.x.resize(nx);
    map.values.resize(nt * nx);
    in.read(reinterpret_cast<char*>(map.values.data()),
            static_cast<std::streamsize>(map.values.size() * sizeof(double)));
    if (!in) throw Error(ErrorCode::ParseError, "truncated intensity dump " + path);
    return map;
}

void write_fullarray_csv(const std::string& path, const FullArrayTrajectory& full) {
    std::ofstream out = open_out(path);
    out << "t";
    for (std::size_t a = 0; a < full.atom_count(); ++a)
        out << ",re_c" << a << ",im_c" << a;
    out << '\n';
    for (std::size_t k = 0; k < full.times.size(); ++k) {
        out << format_double(full.times[k]);
        for (std::size_t a = 0; a < full.atom_count(); ++a)
            out << ',' << format_double(full.amplitudes[a][k].real()) << ','
                << format_double(full.amplitudes[a][k].imag());
        out << '\n';
    }
}

} // namespace atomcav
