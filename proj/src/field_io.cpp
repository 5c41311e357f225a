#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "ssrr/diagnostic.hpp"
#include "ssrr/errors.hpp"

namespace ssrr {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string next_line(std::istream& in, int& line_no) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("field: unexpected end of file after line " + std::to_string(line_no));
    ++line_no;
    return line;
}

}  // namespace

void write_field(std::ostream& out, const GridField& f) {
    validate_field(f);
    out << "SSRR-FIELD 1\n";
    out << f.nx << ' ' << f.ny << ' ' << num(f.origin.x) << ' ' << num(f.origin.y) << ' ' << num(f.dx) << ' '
        << num(f.dy) << '\n';
    out << num(f.upstream.gas().gamma()) << ' ' << num(f.upstream.rho()) << ' ' << num(f.upstream.v().x) << ' '
        << num(f.upstream.v().y) << ' ' << num(f.xi_r.x) << ' ' << num(f.xi_r.y) << '\n';
    for (std::size_t k = 0; k < f.values.size(); ++k) {
        out << num(f.values[k]) << ' ' << to_string(f.labels[k]) << '\n';
    }
}

GridField read_field(std::istream& in) {
    int line_no = 0;
    if (next_line(in, line_no) != "SSRR-FIELD 1") throw FormatError("field: line 1 must be 'SSRR-FIELD 1'");

    std::istringstream l2(next_line(in, line_no));
    int nx = 0, ny = 0;
    double x0, y0, dx, dy;
    if (!(l2 >> nx >> ny >> x0 >> y0 >> dx >> dy)) throw FormatError("field: line 2 must be 'nx ny x0 y0 dx dy'");
    if (nx < 1 || ny < 1 || !(dx > 0.0) || !(dy > 0.0)) throw FormatError("field: line 2 has invalid sizes or spacing");

    std::istringstream l3(next_line(in, line_no));
    double gamma, rho, vx, vy, xrx, xry;
    if (!(l3 >> gamma >> rho >> vx >> vy >> xrx >> xry)) {
        throw FormatError("field: line 3 must be 'gamma rho_I vIx vIy xirx xiry'");
    }

    std::vector<double> values;
    std::vector<NodeLabel> labels;
    const auto n = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
    values.reserve(n);
    labels.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::istringstream ls(next_line(in, line_no));
        double p;
        std::string lab;
        if (!(ls >> p >> lab) || lab.size() != 1) {
            throw FormatError("field: line " + std::to_string(line_no) + " must be 'psi label'");
        }
        values.push_back(p);
        labels.push_back(label_from_char(lab[0]));
    }
    try {
        GridField f{{x0, y0}, dx, dy, nx, ny, std::move(values), std::move(labels),
                    UpstreamData(GasModel(gamma), rho, {vx, vy}), {xrx, xry}, 0.0};
        validate_field(f);
        return f;
    } catch (const FormatError&) {
        throw;
    } catch (const Error& e) {
        throw FormatError(std::string("field: ") + e.what());
    }
}

void write_field_file(const std::string& path, const GridField& f) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open '" + path + "' for writing");
    write_field(out, f);
    if (!out) throw FormatError("write to '" + path + "' failed");
}

GridField read_field_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "' for reading");
    return read_field(in);
}

}  // namespace ssrr
