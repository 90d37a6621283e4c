#pragma once

#include <map>
#include <string>
#include <vector>

#include "ellfib/weier.hpp"

namespace ellfib {

struct KodairaType {
    enum Kind { I, Istar, II, III, IV, IVstar, IIIstar, IIstar };
    Kind kind = I;
    int n = 0;  // index for I and Istar

    static KodairaType In(int n) { return {I, n}; }
    static KodairaType Instar(int n) { return {Istar, n}; }

    int euler() const;
    bool semistable() const { return kind == I && n >= 1; }
    bool starred() const { return kind == Istar || kind == IVstar || kind == IIIstar || kind == IIstar; }
    bool smooth() const { return kind == I && n == 0; }
    // quadratic twist partner: I_n <-> I_n*, II <-> IV*, III <-> III*, IV <-> II*
    KodairaType toggled() const;
    // vanishing orders of (A, B, Delta) realizing the type (minimal over the possible A, B orders)
    void orders(int& vA, int& vB, int& vD) const;
    std::string to_string() const;  // configuration notation: "3", "2*", "IV*", "II"

    friend bool operator<(const KodairaType& a, const KodairaType& b);
    friend bool operator==(const KodairaType& a, const KodairaType& b) { return a.kind == b.kind && a.n == b.n; }
    friend bool operator!=(const KodairaType& a, const KodairaType& b) { return !(a == b); }
};

KodairaType classify_orders(int vA, int vB, int vD);

struct FiberCluster {
    HomogPoly place;
    int places_count;
    int vA, vB, vDelta;
    KodairaType ktype;
};

class Configuration {
public:
    Configuration() = default;
    void add(const KodairaType& k, int count = 1);
    const std::map<KodairaType, int>& counts() const { return counts_; }
    int euler() const;
    int fiber_count() const;
    bool all_semistable() const;
    std::string to_string() const;
    static Configuration parse(const std::string& text);
    friend bool operator==(const Configuration& a, const Configuration& b) { return a.counts_ == b.counts_; }
    friend bool operator!=(const Configuration& a, const Configuration& b) { return !(a == b); }

private:
    std::map<KodairaType, int> counts_;
};

std::vector<FiberCluster> classify_fibers(const WeierstrassModel& m);
Configuration configuration(const WeierstrassModel& m);
Configuration configuration_of(const std::vector<FiberCluster>& clusters);
bool check_semistable_extremal_necessary(const WeierstrassModel& m);

struct Prediction {
    KodairaType ktype;
    bool needs_deflation_parity;  // result is starred and must be paired off by a twist
};
Prediction predict_pullback_type(const KodairaType& f, int e);

}  // namespace ellfib
