pub struct SvmModel;
pub struct KktPartition;
pub struct PartitionDiagnostics;
pub struct HingeLoss;
pub struct SvSystemInverse;
pub enum SetMembership { S, E, R }
