pub struct AttackConfig;
pub struct AttackTrace;
pub struct AttackIterate;
pub struct BoxBounds;
pub enum TerminalReason { EpsilonConverged }
pub enum GradientNote { None }
pub fn init_attack_point() {}
pub fn loss_gradient() {}
pub fn poison_single() {}
pub fn poison_multi() {}
pub fn project_to_box() {}
