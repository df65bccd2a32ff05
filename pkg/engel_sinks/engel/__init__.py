from .trajectory import (  # noqa
    LimitCycle, Trajectory, carrier_of, left_trajectory, right_trajectory, walk
)
from .sinks import (  # noqa
    EngelSink, is_left_engel, is_right_engel, left_sink, right_sink,
    sink_image_under_quotient
)
