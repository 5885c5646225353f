"""jost-forge: symbolic-numeric tools for the 1-D Schrodinger scattering
problem v_xx + (k^2 + u(x)) v = 0.

Three pipelines share an exact-arithmetic substrate:

* ``kovacic`` decides solvability by quadrature for rational potentials;
* ``scattering`` computes Jost solutions, scattering coefficients and bound
  states numerically, deforming the integration contour around real poles;
* ``synthesis`` builds closed-form reflectionless potentials and Jost
  solutions from discrete spectral data.

The ``harness`` module cross-checks the pipelines against each other and the
``cli`` module exposes everything as the ``jost-forge`` command.
"""

__version__ = "0.1.0"
